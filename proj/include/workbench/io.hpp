#pragma once

#include "workbench/morphisms.hpp"
#include "workbench/report.hpp"
#include "workbench/search.hpp"
#include "workbench/semantics.hpp"
#include "workbench/structure.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace workbench {

using Json = nlohmann::ordered_json;

/// Parses frame JSON. Keys: kind, points, R, and E (ms4) or Q (mipc); an
/// optional "map" is accepted and ignored. Anything else throws Error
/// (module "io").
[[nodiscard]] RawFrame raw_frame_from_json( const Json& j );
[[nodiscard]] AnyFrame frame_from_json( const Json& j, ValidateOptions options = {} );

/// `source` is a file path or "@NAME" for a built-in frame.
[[nodiscard]] AnyFrame load_frame( std::string_view source, ValidateOptions options = {} );

/// `map`, when given, is written as {"source point": "target point"} with
/// the source points named by `map_source`.
[[nodiscard]] Json frame_to_json( const AnyFrame& frame );
[[nodiscard]] Json frame_to_json( const AnyFrame& frame, const PointNames& map_source,
                                  const std::vector< std::size_t >& map );

[[nodiscard]] Json report_to_json( const CheckReport& report );
[[nodiscard]] Json morphism_to_json( const PointMap& m, const PointNames& source, const PointNames& target );
[[nodiscard]] Json profile_to_json( const Profile& p );

/// Point-name valuation to point sets; throws FrameError for unknown points.
[[nodiscard]] Valuation to_valuation( const PointNames& names,
                                      const std::map< std::string, std::vector< std::string > >& named );

[[nodiscard]] inline const PointNames& names_of( const AnyFrame& f )
{
    return std::visit( []( const auto& g ) -> const PointNames& { return g.names(); }, f );
}

[[nodiscard]] inline const std::string& id_of( const AnyFrame& f )
{
    return std::visit( []( const auto& g ) -> const std::string& { return g.id(); }, f );
}

} // namespace workbench
