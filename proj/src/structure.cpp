#include "workbench/structure.hpp"

#include "workbench/error.hpp"

#include <algorithm>
#include <array>
#include <span>

namespace workbench {

Skeleton skeleton( const Ms4Frame& g )
{
    const Relation e_r = g.r().symmetric_core();
    const auto classes = e_r.classes();

    std::vector< std::size_t > quotient( g.size() );
    std::vector< std::string > names;
    for ( std::size_t c = 0; c < classes.size(); ++c )
    {
        std::string name;
        for_each_point( classes[ c ], [ & ]( std::size_t y ) {
            quotient[ y ] = c;
            if ( !name.empty() )
                name += '+';
            name += g.names().name( y );
        } );
        names.push_back( std::move( name ) );
    }

    Relation r( classes.size() );
    Relation q( classes.size() );
    for ( std::size_t x = 0; x < g.size(); ++x )
        for ( std::size_t y = 0; y < g.size(); ++y )
        {
            if ( g.r().holds( x, y ) )
                r.set( quotient[ x ], quotient[ y ] );
            if ( g.q().holds( x, y ) )
                q.set( quotient[ x ], quotient[ y ] );
        }
    MipcFrame frame( std::move( names ), std::move( r ), std::move( q ) );
    if ( !g.id().empty() )
        frame.set_id( "skeleton(" + g.id() + ")" );
    return { std::move( frame ), std::move( quotient ) };
}

LkurExtension lkur_extend( const MipcFrame& f )
{
    const PointSet max = maximal_points( f ).max;
    std::vector< std::size_t > projection;
    std::vector< std::string > names = f.points();
    for ( std::size_t x = 0; x < f.size(); ++x )
        projection.push_back( x );
    for_each_point( max, [ & ]( std::size_t m ) {
        projection.push_back( m );
        names.push_back( f.names().name( m ) + "'" );
    } );
    const std::size_t n = names.size();
    if ( n > max_points )
        throw Error( "structure", "extension would exceed " + std::to_string( max_points ) + " points" );

    Relation r( n );
    for ( std::size_t x = 0; x < n; ++x )
        for ( std::size_t y = 0; y < n; ++y )
            if ( f.r().holds( projection[ x ], projection[ y ] ) )
                r.set( x, y );

    // E_Q blocks on the original points, and the same blocks transported to
    // the copies (a block of maximal points yields a block of copies).
    std::vector< PointSet > blocks;
    for ( const PointSet block : f.e_q().classes() )
    {
        blocks.push_back( block );
        PointSet copies = 0;
        for ( std::size_t y = f.size(); y < n; ++y )
            if ( contains( block, projection[ y ] ) )
                copies |= singleton( y );
        if ( copies != 0 )
            blocks.push_back( copies );
    }

    Ms4Frame frame( std::move( names ), std::move( r ), std::move( blocks ) );
    if ( !f.id().empty() )
        frame.set_id( "extend-lkur(" + f.id() + ")" );
    return { std::move( frame ), std::move( projection ) };
}

Ms4Frame mipc_to_ms4( const MipcFrame& f )
{
    Ms4Frame g( f.points(), f.r(), f.e_q().classes() );
    g.set_id( f.id() );
    return g;
}

MipcFrame ms4_to_mipc( const Ms4Frame& g )
{
    if ( !g.r().is_antisymmetric() )
        throw Error( "structure", "R is not a partial order; only partially ordered ms4 frames convert" );
    MipcFrame f( g.points(), g.r(), g.q() );
    f.set_id( g.id() );
    return f;
}

Ms4Frame frame_h()
{
    // a below the cluster {b, c}; E blocks {a, b} and {c}.
    Relation r( 3 );
    r.set_row( 0, 0b111 );
    r.set_row( 1, 0b110 );
    r.set_row( 2, 0b110 );
    Ms4Frame h( { "a", "b", "c" }, std::move( r ), { 0b011, 0b100 } );
    h.set_id( "H" );
    return h;
}

Ms4Frame frame_k()
{
    Relation r( 2 );
    r.set_row( 0, 0b11 );
    r.set_row( 1, 0b10 );
    Ms4Frame k( { "a", "b" }, std::move( r ), { 0b11 } );
    k.set_id( "K" );
    return k;
}

MipcFrame frame_rho_k()
{
    MipcFrame f = skeleton( frame_k() ).frame;
    f.set_id( "rhoK" );
    return f;
}

AnyFrame builtin( std::string_view name )
{
    if ( name == "H" )
        return frame_h();
    if ( name == "K" )
        return frame_k();
    if ( name == "rhoK" )
        return frame_rho_k();
    throw Error( "structure", "unknown built-in frame '" + std::string( name ) + "' (known: H, K, rhoK)" );
}

Ms4Frame subframe( const Ms4Frame& g, PointSet domain )
{
    if ( domain == 0 || !is_subset( domain, g.all() ) )
        throw Error( "structure", "subframe domain must be a nonempty set of frame points" );
    Relation e = g.e().restrict_to( domain );
    Ms4Frame sub( g.names().names_of( domain ), g.r().restrict_to( domain ), e.classes() );
    if ( !g.id().empty() )
        sub.set_id( g.id() + "|" + std::to_string( domain ) );
    return sub;
}

namespace {

class IsoSearch
{
public:
    IsoSearch( std::span< const Relation* const > lhs, std::span< const Relation* const > rhs )
        : _lhs{ lhs }, _rhs{ rhs }, _n{ lhs.front()->size() }, _image( _n, 0 ), _used( _n, false )
    {
        for ( std::size_t x = 0; x < _n; ++x )
        {
            _lhs_profile.push_back( profile( _lhs, x ) );
            _rhs_profile.push_back( profile( _rhs, x ) );
        }
    }

    std::optional< std::vector< std::size_t > > run()
    {
        auto a = _lhs_profile;
        auto b = _rhs_profile;
        std::sort( a.begin(), a.end() );
        std::sort( b.begin(), b.end() );
        if ( a != b )
            return std::nullopt;
        if ( extend( 0 ) )
            return _image;
        return std::nullopt;
    }

private:
    // Per relation: out-degree, in-degree, loop. Invariant under isomorphism.
    static std::vector< int > profile( std::span< const Relation* const > rels, std::size_t x )
    {
        std::vector< int > p;
        for ( const Relation* r : rels )
        {
            p.push_back( cardinality( r->image( x ) ) );
            p.push_back( cardinality( r->preimage( singleton( x ) ) ) );
            p.push_back( r->holds( x, x ) ? 1 : 0 );
        }
        return p;
    }

    bool consistent( std::size_t x, std::size_t y ) const
    {
        for ( std::size_t k = 0; k < _lhs.size(); ++k )
        {
            const Relation& a = *_lhs[ k ];
            const Relation& b = *_rhs[ k ];
            if ( a.holds( x, x ) != b.holds( y, y ) )
                return false;
            for ( std::size_t prev = 0; prev < x; ++prev )
            {
                const std::size_t img = _image[ prev ];
                if ( a.holds( x, prev ) != b.holds( y, img ) || a.holds( prev, x ) != b.holds( img, y ) )
                    return false;
            }
        }
        return true;
    }

    bool extend( std::size_t x )
    {
        if ( x == _n )
            return true;
        for ( std::size_t y = 0; y < _n; ++y )
        {
            if ( _used[ y ] || _lhs_profile[ x ] != _rhs_profile[ y ] || !consistent( x, y ) )
                continue;
            _used[ y ] = true;
            _image[ x ] = y;
            if ( extend( x + 1 ) )
                return true;
            _used[ y ] = false;
        }
        return false;
    }

    std::span< const Relation* const > _lhs;
    std::span< const Relation* const > _rhs;
    std::size_t _n;
    std::vector< std::size_t > _image;
    std::vector< bool > _used;
    std::vector< std::vector< int > > _lhs_profile;
    std::vector< std::vector< int > > _rhs_profile;
};

} // namespace

std::optional< std::vector< std::size_t > > iso( const Ms4Frame& a, const Ms4Frame& b )
{
    if ( a.size() != b.size() )
        return std::nullopt;
    const std::array< const Relation*, 2 > lhs{ &a.r(), &a.e() };
    const std::array< const Relation*, 2 > rhs{ &b.r(), &b.e() };
    return IsoSearch( lhs, rhs ).run();
}

std::optional< std::vector< std::size_t > > iso( const MipcFrame& a, const MipcFrame& b )
{
    if ( a.size() != b.size() )
        return std::nullopt;
    const std::array< const Relation*, 2 > lhs{ &a.r(), &a.q() };
    const std::array< const Relation*, 2 > rhs{ &b.r(), &b.q() };
    return IsoSearch( lhs, rhs ).run();
}

} // namespace workbench
