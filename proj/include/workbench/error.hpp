#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace workbench {

/// Base of every error raised by the library. `module()` names the
/// subsystem that rejected the input ("syntax", "frames", ...) and is
/// prefixed to `what()`.
class Error : public std::runtime_error
{
public:
    Error( std::string module, const std::string& message );

    [[nodiscard]] const std::string& module() const noexcept { return _module; }
    [[nodiscard]] const std::string& message() const noexcept { return _message; }

private:
    std::string _module;
    std::string _message;
};

class ParseError : public Error
{
public:
    ParseError( std::string module, const std::string& message, std::size_t offset );

    [[nodiscard]] std::size_t offset() const noexcept { return _offset; }

private:
    std::size_t _offset;
};

/// A frame failed one of its defining conditions. `condition()` is the
/// 1-based index of the failed condition (0 for malformed point data) and
/// `witness()` lists the offending points in order.
class FrameError : public Error
{
public:
    FrameError( const std::string& message, int condition, std::vector< std::string > witness = {} );

    [[nodiscard]] int condition() const noexcept { return _condition; }
    [[nodiscard]] const std::vector< std::string >& witness() const noexcept { return _witness; }

private:
    int _condition;
    std::vector< std::string > _witness;
};

} // namespace workbench
