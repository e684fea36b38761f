#include "workbench/frames.hpp"

#include "workbench/error.hpp"

#include <set>

namespace workbench {

PointNames::PointNames( std::vector< std::string > names ) : _names{ std::move( names ) }
{
    if ( _names.empty() )
        throw FrameError( "a frame needs at least one point", 0 );
    if ( _names.size() > max_points )
        throw FrameError( "at most " + std::to_string( max_points ) + " points are supported", 0 );
    std::set< std::string_view > seen;
    for ( const auto& n : _names )
        if ( !seen.insert( n ).second )
            throw FrameError( "duplicate point name '" + n + "'", 0, { n } );
}

std::size_t PointNames::index_of( std::string_view name ) const
{
    for ( std::size_t i = 0; i < _names.size(); ++i )
        if ( _names[ i ] == name )
            return i;
    throw FrameError( "unknown point '" + std::string( name ) + "'", 0, { std::string( name ) } );
}

std::vector< std::string > PointNames::names_of( PointSet s ) const
{
    std::vector< std::string > out;
    for_each_point( s, [ & ]( std::size_t i ) { out.push_back( _names.at( i ) ); } );
    return out;
}

PointSet PointNames::set_of( const std::vector< std::string >& names ) const
{
    PointSet s = 0;
    for ( const auto& n : names )
        s |= singleton( index_of( n ) );
    return s;
}

namespace {

// Witness for a relation that is not a quasi-order: a non-reflexive point,
// or a triple x R y R z without x R z.
void require_quasi_order( const PointNames& names, const Relation& r, const std::string& label, int condition )
{
    for ( std::size_t x = 0; x < r.size(); ++x )
        if ( !r.holds( x, x ) )
            throw FrameError( label + " is not reflexive at " + names.name( x ), condition, { names.name( x ) } );
    for ( std::size_t x = 0; x < r.size(); ++x )
        for ( std::size_t y = 0; y < r.size(); ++y )
        {
            if ( !r.holds( x, y ) )
                continue;
            for ( std::size_t z = 0; z < r.size(); ++z )
                if ( r.holds( y, z ) && !r.holds( x, z ) )
                    throw FrameError( label + " is not transitive: " + names.name( x ) + ", " + names.name( y ) +
                                          ", " + names.name( z ),
                                      condition, { names.name( x ), names.name( y ), names.name( z ) } );
        }
}

std::vector< PointSet > canonical_blocks( const PointNames& names, std::vector< PointSet > blocks )
{
    PointSet covered = 0;
    for ( const PointSet b : blocks )
    {
        if ( b == 0 )
            throw FrameError( "E has an empty block", 2 );
        if ( ( b & covered ) != 0 )
        {
            const auto i = static_cast< std::size_t >( std::countr_zero( b & covered ) );
            throw FrameError( "point " + names.name( i ) + " lies in two E blocks", 2, { names.name( i ) } );
        }
        covered |= b;
    }
    if ( covered != full_set( names.size() ) )
    {
        const auto i = static_cast< std::size_t >( std::countr_zero( ~covered ) );
        throw FrameError( "point " + names.name( i ) + " lies in no E block", 2, { names.name( i ) } );
    }
    return Relation::from_blocks( names.size(), blocks ).classes();
}

Relation relation_from_pairs( const PointNames& names, const std::vector< std::pair< std::string, std::string > >& pairs )
{
    Relation r( names.size() );
    for ( const auto& [ a, b ] : pairs )
        r.set( names.index_of( a ), names.index_of( b ) );
    return r;
}

} // namespace

Ms4Frame::Ms4Frame( std::vector< std::string > points, Relation r, std::vector< PointSet > blocks,
                    ValidateOptions options )
    : _names{ std::move( points ) }, _r{ std::move( r ) }
{
    if ( _r.size() != _names.size() )
        throw FrameError( "R has the wrong number of rows", 0 );
    if ( options.close )
        _r = _r.reflexive_transitive_closure();
    require_quasi_order( _names, _r, "R", 1 );
    _blocks = canonical_blocks( _names, std::move( blocks ) );
    _e = Relation::from_blocks( size(), _blocks );

    // xEy and yRz imply z in E[R[x]].
    for ( std::size_t x = 0; x < size(); ++x )
    {
        const PointSet reachable = _e.image_of( _r.image( x ) );
        for ( std::size_t y = 0; y < size(); ++y )
        {
            if ( !_e.holds( x, y ) )
                continue;
            const PointSet missing = _r.image( y ) & ~reachable;
            if ( missing != 0 )
            {
                const auto z = static_cast< std::size_t >( std::countr_zero( missing ) );
                throw FrameError( "commutativity fails for x=" + _names.name( x ) + ", y=" + _names.name( y ) +
                                      ", z=" + _names.name( z ),
                                  3, { _names.name( x ), _names.name( y ), _names.name( z ) } );
            }
        }
    }
    _q = _r.compose_then( _e );
}

MipcFrame::MipcFrame( std::vector< std::string > points, Relation r, Relation q, ValidateOptions options )
    : _names{ std::move( points ) }, _r{ std::move( r ) }, _q{ std::move( q ) }
{
    if ( _r.size() != _names.size() || _q.size() != _names.size() )
        throw FrameError( "relations have the wrong number of rows", 0 );
    if ( options.close )
    {
        _r = _r.reflexive_transitive_closure();
        _q = _q.reflexive_transitive_closure();
    }
    require_quasi_order( _names, _r, "R", 1 );
    for ( std::size_t x = 0; x < size(); ++x )
        for ( std::size_t y = x + 1; y < size(); ++y )
            if ( _r.holds( x, y ) && _r.holds( y, x ) )
                throw FrameError( "R is not antisymmetric: " + _names.name( x ) + ", " + _names.name( y ), 1,
                                  { _names.name( x ), _names.name( y ) } );
    require_quasi_order( _names, _q, "Q", 2 );
    for ( std::size_t x = 0; x < size(); ++x )
    {
        const PointSet extra = _r.image( x ) & ~_q.image( x );
        if ( extra != 0 )
        {
            const auto y = static_cast< std::size_t >( std::countr_zero( extra ) );
            throw FrameError( "R is not contained in Q: " + _names.name( x ) + ", " + _names.name( y ), 3,
                              { _names.name( x ), _names.name( y ) } );
        }
    }
    _e_q = _q.symmetric_core();
    for ( std::size_t x = 0; x < size(); ++x )
    {
        const PointSet missing = _q.image( x ) & ~_e_q.image_of( _r.image( x ) );
        if ( missing != 0 )
        {
            const auto y = static_cast< std::size_t >( std::countr_zero( missing ) );
            throw FrameError( "x Q y has no z with x R z E_Q y for x=" + _names.name( x ) + ", y=" + _names.name( y ),
                              4, { _names.name( x ), _names.name( y ) } );
        }
    }
}

Ms4Frame validate_ms4( const RawFrame& raw, ValidateOptions options )
{
    if ( raw.kind != "ms4" )
        throw FrameError( "expected an ms4 frame, got '" + raw.kind + "'", 0 );
    if ( !raw.q.empty() )
        throw FrameError( "an ms4 frame has no Q", 0 );
    const PointNames names( raw.points );
    auto r = relation_from_pairs( names, raw.r );
    std::vector< PointSet > blocks;
    for ( const auto& block : raw.e )
    {
        if ( block.empty() )
            throw FrameError( "E has an empty block", 2 );
        std::set< std::string_view > inside;
        for ( const auto& n : block )
            if ( !inside.insert( n ).second )
                throw FrameError( "point " + n + " repeated within an E block", 2, { n } );
        blocks.push_back( names.set_of( block ) );
    }
    return Ms4Frame( raw.points, std::move( r ), std::move( blocks ), options );
}

MipcFrame validate_mipc( const RawFrame& raw, ValidateOptions options )
{
    if ( raw.kind != "mipc" )
        throw FrameError( "expected an mipc frame, got '" + raw.kind + "'", 0 );
    if ( !raw.e.empty() )
        throw FrameError( "an mipc frame has no E", 0 );
    const PointNames names( raw.points );
    return MipcFrame( raw.points, relation_from_pairs( names, raw.r ), relation_from_pairs( names, raw.q ), options );
}

DerivedRelations derived_relations( const Ms4Frame& g )
{
    return { g.r().symmetric_core(), g.q().symmetric_core(), g.q() };
}

DerivedRelations derived_relations( const MipcFrame& f )
{
    return { f.r().symmetric_core(), f.e_q(), f.q() };
}

MaximalPoints maximal_points( const Relation& r )
{
    MaximalPoints out;
    for ( std::size_t x = 0; x < r.size(); ++x )
    {
        const PointSet up = r.image( x );
        if ( is_subset( up, singleton( x ) ) )
            out.max |= singleton( x );
        bool quasi = true;
        for_each_point( up, [ & ]( std::size_t y ) { quasi = quasi && r.holds( y, x ); } );
        if ( quasi )
            out.qmax |= singleton( x );
    }
    return out;
}

namespace {

template < typename Frame >
CheckReport class_condition( const Frame& frame, const Relation& eq, PointSet tops, const char* label )
{
    CheckReport report;
    report.frame_id = frame.id();
    report.formula = label;
    for ( std::size_t x = 0; x < frame.size() && report.valid; ++x )
    {
        if ( !contains( tops, x ) )
            continue;
        const PointSet outside = eq.image( x ) & ~tops;
        if ( outside != 0 )
        {
            report.valid = false;
            report.witness = { frame.names().name( x ),
                               frame.names().name( static_cast< std::size_t >( std::countr_zero( outside ) ) ) };
        }
    }
    return report;
}

} // namespace

CheckReport check_kp( const MipcFrame& f )
{
    return class_condition( f, f.e_q(), maximal_points( f ).max, "KP" );
}

CheckReport check_gkp( const Ms4Frame& g )
{
    return class_condition( g, g.e(), maximal_points( g ).qmax, "GKP" );
}

CheckReport check_lkp( const Ms4Frame& g )
{
    CheckReport report;
    report.frame_id = g.id();
    report.formula = "LKP";
    const PointSet qmax = maximal_points( g ).qmax;
    const Relation e_r = g.r().symmetric_core();
    for ( std::size_t x = 0; x < g.size(); ++x )
    {
        if ( !contains( qmax, x ) )
            continue;
        bool found = false;
        for_each_point( e_r.image( x ), [ & ]( std::size_t y ) { found = found || is_subset( g.e().image( y ), qmax ); } );
        if ( !found )
        {
            report.valid = false;
            report.witness = { g.names().name( x ) };
            break;
        }
    }
    return report;
}

bool is_antisymmetric( const Ms4Frame& g ) noexcept
{
    return g.r().is_antisymmetric();
}

bool quasi_clean( const Ms4Frame& g, std::size_t x ) noexcept
{
    const PointSet block = g.e().image( x );
    bool clean = true;
    for_each_point( block, [ & ]( std::size_t y ) {
        for_each_point( g.r().image( y ) & block, [ & ]( std::size_t z ) { clean = clean && g.r().holds( z, y ); } );
    } );
    return clean;
}

} // namespace workbench
