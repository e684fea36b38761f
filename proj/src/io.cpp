#include "workbench/io.hpp"

#include "workbench/error.hpp"

#include <fstream>
#include <sstream>

namespace workbench {

namespace {

std::vector< std::pair< std::string, std::string > > pairs_from( const Json& j, const char* key )
{
    if ( !j.is_array() )
        throw Error( "io", std::string( key ) + " must be a list of pairs" );
    std::vector< std::pair< std::string, std::string > > out;
    for ( const auto& p : j )
    {
        if ( !p.is_array() || p.size() != 2 || !p[ 0 ].is_string() || !p[ 1 ].is_string() )
            throw Error( "io", std::string( key ) + " entries must be [\"x\", \"y\"] pairs" );
        out.emplace_back( p[ 0 ].get< std::string >(), p[ 1 ].get< std::string >() );
    }
    return out;
}

std::vector< std::string > strings_from( const Json& j, const char* key )
{
    if ( !j.is_array() )
        throw Error( "io", std::string( key ) + " must be a list of point names" );
    std::vector< std::string > out;
    for ( const auto& s : j )
    {
        if ( !s.is_string() )
            throw Error( "io", std::string( key ) + " must contain strings" );
        out.push_back( s.get< std::string >() );
    }
    return out;
}

Json pairs_to_json( const PointNames& names, const Relation& r )
{
    Json out = Json::array();
    for ( std::size_t x = 0; x < r.size(); ++x )
        for_each_point( r.image( x ), [ & ]( std::size_t y ) { out.push_back( { names.name( x ), names.name( y ) } ); } );
    return out;
}

} // namespace

RawFrame raw_frame_from_json( const Json& j )
{
    if ( !j.is_object() )
        throw Error( "io", "a frame must be a JSON object" );
    RawFrame raw;
    bool has_r = false;
    for ( const auto& [ key, value ] : j.items() )
    {
        if ( key == "kind" )
        {
            if ( !value.is_string() )
                throw Error( "io", "kind must be \"ms4\" or \"mipc\"" );
            raw.kind = value.get< std::string >();
        }
        else if ( key == "points" )
            raw.points = strings_from( value, "points" );
        else if ( key == "R" )
        {
            raw.r = pairs_from( value, "R" );
            has_r = true;
        }
        else if ( key == "Q" )
            raw.q = pairs_from( value, "Q" );
        else if ( key == "E" )
        {
            if ( !value.is_array() )
                throw Error( "io", "E must be a list of blocks" );
            for ( const auto& block : value )
                raw.e.push_back( strings_from( block, "E" ) );
        }
        else if ( key != "map" )
            throw Error( "io", "unknown key '" + key + "'" );
    }
    if ( raw.kind != "ms4" && raw.kind != "mipc" )
        throw Error( "io", "kind must be \"ms4\" or \"mipc\"" );
    if ( !has_r )
        throw Error( "io", "missing key 'R'" );
    if ( raw.kind == "ms4" && !j.contains( "E" ) )
        throw Error( "io", "missing key 'E'" );
    if ( raw.kind == "mipc" && !j.contains( "Q" ) )
        throw Error( "io", "missing key 'Q'" );
    return raw;
}

AnyFrame frame_from_json( const Json& j, ValidateOptions options )
{
    const RawFrame raw = raw_frame_from_json( j );
    if ( raw.kind == "ms4" )
        return validate_ms4( raw, options );
    return validate_mipc( raw, options );
}

AnyFrame load_frame( std::string_view source, ValidateOptions options )
{
    if ( source.starts_with( '@' ) )
        return builtin( source.substr( 1 ) );
    const std::string path( source );
    std::ifstream in( path );
    if ( !in )
        throw Error( "io", "cannot read '" + path + "'" );
    Json j;
    try
    {
        j = Json::parse( in );
    }
    catch ( const nlohmann::json::parse_error& e )
    {
        throw Error( "io", path + ": invalid JSON (" + e.what() + ")" );
    }
    AnyFrame frame = frame_from_json( j, options );
    std::visit( [ & ]( auto& g ) { g.set_id( path ); }, frame );
    return frame;
}

Json frame_to_json( const AnyFrame& frame )
{
    Json j;
    std::visit(
        [ & ]< typename Frame >( const Frame& g ) {
            j[ "kind" ] = std::is_same_v< Frame, Ms4Frame > ? "ms4" : "mipc";
            j[ "points" ] = g.points();
            j[ "R" ] = pairs_to_json( g.names(), g.r() );
            if constexpr ( std::is_same_v< Frame, Ms4Frame > )
            {
                Json blocks = Json::array();
                for ( const PointSet b : g.blocks() )
                    blocks.push_back( g.names().names_of( b ) );
                j[ "E" ] = blocks;
            }
            else
                j[ "Q" ] = pairs_to_json( g.names(), g.q() );
        },
        frame );
    return j;
}

Json frame_to_json( const AnyFrame& frame, const PointNames& map_source, const std::vector< std::size_t >& map )
{
    Json j = frame_to_json( frame );
    const PointNames& target = names_of( frame );
    Json m = Json::object();
    for ( std::size_t i = 0; i < map.size(); ++i )
        m[ map_source.name( i ) ] = target.name( map[ i ] );
    j[ "map" ] = m;
    return j;
}

Json report_to_json( const CheckReport& report )
{
    Json j;
    j[ "valid" ] = report.valid;
    if ( report.counterexample )
    {
        Json valuation = Json::object();
        for ( const auto& [ letter, points ] : report.counterexample->valuation )
            valuation[ letter ] = points;
        j[ "counterexample" ] = { { "valuation", valuation }, { "point", report.counterexample->point } };
    }
    if ( !report.witness.empty() )
        j[ "witness" ] = report.witness;
    j[ "valuations_tried" ] = report.valuations_tried;
    return j;
}

Json morphism_to_json( const PointMap& m, const PointNames& source, const PointNames& target )
{
    Json map = Json::object();
    for_each_point( m.domain, [ & ]( std::size_t x ) { map[ source.name( x ) ] = target.name( m.image[ x ] ); } );
    return { { "domain", source.names_of( m.domain ) }, { "map", map } };
}

Json profile_to_json( const Profile& p )
{
    Json fields = Json::object();
    for ( const auto& [ name, value ] : p.fields() )
        fields[ name ] = value;
    return { { "frame", p.frame_id() }, { "kind", p.kind() == FrameKind::Ms4 ? "ms4" : "mipc" }, { "profile", fields } };
}

Valuation to_valuation( const PointNames& names, const std::map< std::string, std::vector< std::string > >& named )
{
    Valuation v;
    for ( const auto& [ letter, points ] : named )
        v[ letter ] = names.set_of( points );
    return v;
}

} // namespace workbench
