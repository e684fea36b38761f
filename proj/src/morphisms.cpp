#include "workbench/morphisms.hpp"

#include "workbench/error.hpp"
#include "workbench/parallel.hpp"
#include "workbench/structure.hpp"

namespace workbench {

namespace {

PointSet image_of_set( const PointMap& m, PointSet s )
{
    PointSet out = 0;
    for_each_point( s, [ & ]( std::size_t y ) { out |= singleton( m.image[ y ] ); } );
    return out;
}

void require_total( const PointMap& m, std::size_t source_size, std::size_t target_size )
{
    if ( m.domain == 0 || !is_subset( m.domain, full_set( source_size ) ) || m.image.size() < source_size )
        throw Error( "morphisms", "map domain is not a nonempty set of source points" );
    for_each_point( m.domain, [ & ]( std::size_t x ) {
        if ( m.image[ x ] >= target_size )
            throw Error( "morphisms", "map sends a point outside the target frame" );
    } );
}

} // namespace

MorphismVerdict check_ms4_morphism( const PointMap& m, const Ms4Frame& src, const Ms4Frame& tgt )
{
    require_total( m, src.size(), tgt.size() );
    MorphismVerdict verdict;
    for_each_point( m.domain, [ & ]( std::size_t x ) {
        if ( !verdict.ok )
            return;
        const std::size_t fx = m.image[ x ];
        if ( tgt.r().image( fx ) != image_of_set( m, src.r().image( x ) & m.domain ) )
            verdict = { false, 2, x };
        else if ( tgt.e().image( fx ) != image_of_set( m, src.e().image( x ) & m.domain ) )
            verdict = { false, 3, x };
    } );
    return verdict;
}

MorphismVerdict check_mipc_morphism( const PointMap& m, const MipcFrame& src, const MipcFrame& tgt )
{
    require_total( m, src.size(), tgt.size() );
    const Relation src_q_inv = src.q().inverse();
    const Relation tgt_q_inv = tgt.q().inverse();
    MorphismVerdict verdict;
    for_each_point( m.domain, [ & ]( std::size_t x ) {
        if ( !verdict.ok )
            return;
        const std::size_t fx = m.image[ x ];
        if ( tgt.r().image( fx ) != image_of_set( m, src.r().image( x ) & m.domain ) )
            verdict = { false, 2, x };
        else if ( tgt.q().image( fx ) != image_of_set( m, src.q().image( x ) & m.domain ) )
            verdict = { false, 3, x };
        else if ( tgt_q_inv.image( fx ) != tgt.r().preimage( image_of_set( m, src_q_inv.image( x ) & m.domain ) ) )
            verdict = { false, 4, x };
    } );
    return verdict;
}

std::vector< PointSet > q_upsets( const Ms4Frame& g )
{
    std::vector< PointSet > out;
    for ( std::uint64_t s = 0; s <= g.all(); ++s )
        if ( g.q().is_upset( static_cast< PointSet >( s ) ) )
            out.push_back( static_cast< PointSet >( s ) );
    return out;
}

namespace {

/// Backtracking over the points of one domain in increasing order; the
/// forth direction of both p-morphism conditions is checked as soon as both
/// ends of a pair are assigned, the back direction and surjectivity at the
/// leaves.
class OntoSearch
{
public:
    OntoSearch( const Ms4Frame& src, const Ms4Frame& tgt, PointSet domain, std::size_t limit )
        : _src{ src }, _tgt{ tgt }, _domain{ domain }, _limit{ limit }
    {
        for_each_point( domain, [ & ]( std::size_t x ) { _order.push_back( x ); } );
        _map.source_id = src.id();
        _map.target_id = tgt.id();
        _map.domain = domain;
        _map.image.assign( src.size(), 0 );
    }

    std::vector< PointMap > run()
    {
        assign( 0, 0 );
        return std::move( _found );
    }

private:
    bool full() const { return _limit != 0 && _found.size() >= _limit; }

    bool forth_ok( std::size_t depth, std::size_t x, std::size_t t ) const
    {
        for ( std::size_t k = 0; k < depth; ++k )
        {
            const std::size_t y = _order[ k ];
            const std::size_t u = _map.image[ y ];
            if ( _src.r().holds( x, y ) && !_tgt.r().holds( t, u ) )
                return false;
            if ( _src.r().holds( y, x ) && !_tgt.r().holds( u, t ) )
                return false;
            if ( _src.e().holds( x, y ) && !_tgt.e().holds( t, u ) )
                return false;
        }
        return _tgt.r().holds( t, t );
    }

    void assign( std::size_t depth, PointSet covered )
    {
        if ( full() )
            return;
        const std::size_t remaining = _order.size() - depth;
        if ( static_cast< std::size_t >( cardinality( _tgt.all() & ~covered ) ) > remaining )
            return;
        if ( depth == _order.size() )
        {
            if ( check_ms4_morphism( _map, _src, _tgt ).ok )
                _found.push_back( _map );
            return;
        }
        const std::size_t x = _order[ depth ];
        for ( std::size_t t = 0; t < _tgt.size() && !full(); ++t )
        {
            if ( !forth_ok( depth, x, t ) )
                continue;
            _map.image[ x ] = t;
            assign( depth + 1, covered | singleton( t ) );
        }
    }

    const Ms4Frame& _src;
    const Ms4Frame& _tgt;
    PointSet _domain;
    std::size_t _limit;
    std::vector< std::size_t > _order;
    PointMap _map;
    std::vector< PointMap > _found;
};

bool exceeds_cap( std::size_t target_size, int domain_size, std::uint64_t cap )
{
    if ( cap == 0 )
        return false;
    std::uint64_t space = 1;
    for ( int i = 0; i < domain_size; ++i )
    {
        space *= target_size;
        if ( space > cap )
            return true;
    }
    return false;
}

} // namespace

std::vector< PointMap > find_onto_morphisms( const Ms4Frame& src, const Ms4Frame& tgt, bool from_q_upsets,
                                             MorphismSearchOptions options )
{
    std::vector< PointSet > domains;
    if ( from_q_upsets )
    {
        for ( const PointSet u : q_upsets( src ) )
            if ( u != 0 )
                domains.push_back( u );
    }
    else
        domains.push_back( src.all() );

    for ( const PointSet u : domains )
        if ( exceeds_cap( tgt.size(), cardinality( u ), options.cap ) )
            throw Error( "morphisms", "search space " + std::to_string( tgt.size() ) + "^" +
                                          std::to_string( cardinality( u ) ) + " exceeds the cap of " +
                                          std::to_string( options.cap ) + " assignments" );

    std::vector< std::vector< PointMap > > per_domain( domains.size() );
    parallel_for( domains.size(), options.threads, [ & ]( std::size_t i ) {
        per_domain[ i ] = OntoSearch( src, tgt, domains[ i ], options.limit ).run();
    } );

    std::vector< PointMap > out;
    for ( auto& maps : per_domain )
        for ( auto& m : maps )
        {
            if ( options.limit != 0 && out.size() >= options.limit )
                return out;
            out.push_back( std::move( m ) );
        }
    return out;
}

bool splitting_lkur_test( const Ms4Frame& g, MorphismSearchOptions options )
{
    options.limit = 1;
    return find_onto_morphisms( g, frame_k(), true, options ).empty();
}

} // namespace workbench
