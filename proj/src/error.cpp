#include "workbench/error.hpp"

namespace workbench {

Error::Error( std::string module, const std::string& message )
    : std::runtime_error( module + ": " + message ), _module{ std::move( module ) }, _message{ message }
{
}

ParseError::ParseError( std::string module, const std::string& message, std::size_t offset )
    : Error( std::move( module ), message + " at offset " + std::to_string( offset ) ), _offset{ offset }
{
}

FrameError::FrameError( const std::string& message, int condition, std::vector< std::string > witness )
    : Error( "frames", message ), _condition{ condition }, _witness{ std::move( witness ) }
{
}

} // namespace workbench
