#include "workbench/relation.hpp"

namespace workbench {

Relation Relation::identity( std::size_t n )
{
    Relation r( n );
    for ( std::size_t i = 0; i < n; ++i )
        r.set( i, i );
    return r;
}

Relation Relation::universal( std::size_t n )
{
    Relation r( n );
    for ( std::size_t i = 0; i < n; ++i )
        r.set_row( i, full_set( n ) );
    return r;
}

Relation Relation::from_blocks( std::size_t n, const std::vector< PointSet >& blocks )
{
    Relation r( n );
    for ( const PointSet block : blocks )
        for_each_point( block, [ & ]( std::size_t i ) { r.set_row( i, block ); } );
    return r;
}

PointSet Relation::image_of( PointSet a ) const noexcept
{
    PointSet out = 0;
    for_each_point( a, [ & ]( std::size_t i ) { out |= _rows[ i ]; } );
    return out;
}

PointSet Relation::preimage( PointSet a ) const noexcept
{
    PointSet out = 0;
    for ( std::size_t i = 0; i < _rows.size(); ++i )
        if ( ( _rows[ i ] & a ) != 0 )
            out |= singleton( i );
    return out;
}

PointSet Relation::box( PointSet a ) const noexcept
{
    PointSet out = 0;
    for ( std::size_t i = 0; i < _rows.size(); ++i )
        if ( is_subset( _rows[ i ], a ) )
            out |= singleton( i );
    return out;
}

Relation Relation::inverse() const
{
    Relation out( size() );
    for ( std::size_t i = 0; i < size(); ++i )
        for_each_point( _rows[ i ], [ & ]( std::size_t j ) { out.set( j, i ); } );
    return out;
}

Relation Relation::compose_then( const Relation& next ) const
{
    Relation out( size() );
    for ( std::size_t i = 0; i < size(); ++i )
        out.set_row( i, next.image_of( _rows[ i ] ) );
    return out;
}

Relation Relation::symmetric_core() const
{
    Relation out( size() );
    for ( std::size_t i = 0; i < size(); ++i )
        for_each_point( _rows[ i ], [ & ]( std::size_t j ) {
            if ( holds( j, i ) )
                out.set( i, j );
        } );
    return out;
}

Relation Relation::reflexive_transitive_closure() const
{
    Relation out = *this;
    for ( std::size_t i = 0; i < size(); ++i )
        out.set( i, i );
    // Warshall over bit rows.
    for ( std::size_t k = 0; k < size(); ++k )
        for ( std::size_t i = 0; i < size(); ++i )
            if ( out.holds( i, k ) )
                out._rows[ i ] |= out._rows[ k ];
    return out;
}

Relation Relation::restrict_to( PointSet domain ) const
{
    std::vector< std::size_t > members;
    for_each_point( domain, [ & ]( std::size_t i ) { members.push_back( i ); } );
    Relation out( members.size() );
    for ( std::size_t a = 0; a < members.size(); ++a )
        for ( std::size_t b = 0; b < members.size(); ++b )
            if ( holds( members[ a ], members[ b ] ) )
                out.set( a, b );
    return out;
}

bool Relation::is_reflexive() const noexcept
{
    for ( std::size_t i = 0; i < size(); ++i )
        if ( !holds( i, i ) )
            return false;
    return true;
}

bool Relation::is_symmetric() const noexcept
{
    return *this == inverse();
}

bool Relation::is_transitive() const noexcept
{
    for ( std::size_t i = 0; i < size(); ++i )
        if ( !is_subset( image_of( _rows[ i ] ), _rows[ i ] ) )
            return false;
    return true;
}

bool Relation::is_antisymmetric() const noexcept
{
    for ( std::size_t i = 0; i < size(); ++i )
        for ( std::size_t j = i + 1; j < size(); ++j )
            if ( holds( i, j ) && holds( j, i ) )
                return false;
    return true;
}

bool Relation::is_subset_of( const Relation& other ) const noexcept
{
    if ( other.size() != size() )
        return false;
    for ( std::size_t i = 0; i < size(); ++i )
        if ( !is_subset( _rows[ i ], other._rows[ i ] ) )
            return false;
    return true;
}

std::vector< PointSet > Relation::classes() const
{
    std::vector< PointSet > out;
    PointSet seen = 0;
    for ( std::size_t i = 0; i < size(); ++i )
    {
        if ( contains( seen, i ) )
            continue;
        out.push_back( _rows[ i ] );
        seen |= _rows[ i ];
    }
    return out;
}

} // namespace workbench
