#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace workbench {

/// A set of points of a finite frame: bit i is point i in declaration order.
using PointSet = std::uint32_t;

inline constexpr std::size_t max_points = 32;

[[nodiscard]] constexpr PointSet full_set( std::size_t n ) noexcept
{
    return n >= 32 ? ~PointSet{ 0 } : ( PointSet{ 1 } << n ) - 1;
}

[[nodiscard]] constexpr PointSet singleton( std::size_t i ) noexcept { return PointSet{ 1 } << i; }

[[nodiscard]] constexpr bool contains( PointSet s, std::size_t i ) noexcept { return ( s >> i ) & 1U; }

[[nodiscard]] constexpr bool is_subset( PointSet a, PointSet b ) noexcept { return ( a & ~b ) == 0; }

[[nodiscard]] constexpr int cardinality( PointSet s ) noexcept { return std::popcount( s ); }

/// Calls `fn(i)` for every member of `s`, lowest index first.
template < typename Fn >
constexpr void for_each_point( PointSet s, Fn&& fn )
{
    while ( s != 0 )
    {
        const auto i = static_cast< std::size_t >( std::countr_zero( s ) );
        fn( i );
        s &= s - 1;
    }
}

/// Binary relation on {0..n-1} stored as successor rows.
class Relation
{
public:
    Relation() = default;
    explicit Relation( std::size_t n ) : _rows( n, 0 ) {}

    [[nodiscard]] static Relation identity( std::size_t n );
    [[nodiscard]] static Relation universal( std::size_t n );
    /// The equivalence whose classes are `blocks`.
    [[nodiscard]] static Relation from_blocks( std::size_t n, const std::vector< PointSet >& blocks );

    [[nodiscard]] std::size_t size() const noexcept { return _rows.size(); }

    [[nodiscard]] bool holds( std::size_t x, std::size_t y ) const noexcept { return contains( _rows[ x ], y ); }
    void set( std::size_t x, std::size_t y ) noexcept { _rows[ x ] |= singleton( y ); }
    void set_row( std::size_t x, PointSet row ) noexcept { _rows[ x ] = row; }

    /// R[x]
    [[nodiscard]] PointSet image( std::size_t x ) const noexcept { return _rows[ x ]; }
    /// R[A]
    [[nodiscard]] PointSet image_of( PointSet a ) const noexcept;
    /// R^{-1}[A] = { x : R[x] meets A }
    [[nodiscard]] PointSet preimage( PointSet a ) const noexcept;
    /// { x : R[x] within A }
    [[nodiscard]] PointSet box( PointSet a ) const noexcept;

    [[nodiscard]] Relation inverse() const;
    /// x (R;S) z iff x R y and y S z for some y. With R = this and
    /// S = `next`, `compose_then(E)` is the composition written E∘R.
    [[nodiscard]] Relation compose_then( const Relation& next ) const;
    /// x ~ y iff x R y and y R x.
    [[nodiscard]] Relation symmetric_core() const;
    [[nodiscard]] Relation reflexive_transitive_closure() const;
    /// The relation induced on the members of `domain`, renumbered densely
    /// in increasing order.
    [[nodiscard]] Relation restrict_to( PointSet domain ) const;

    [[nodiscard]] bool is_reflexive() const noexcept;
    [[nodiscard]] bool is_symmetric() const noexcept;
    [[nodiscard]] bool is_transitive() const noexcept;
    [[nodiscard]] bool is_antisymmetric() const noexcept;
    [[nodiscard]] bool is_quasi_order() const noexcept { return is_reflexive() && is_transitive(); }
    [[nodiscard]] bool is_partial_order() const noexcept { return is_quasi_order() && is_antisymmetric(); }
    [[nodiscard]] bool is_subset_of( const Relation& other ) const noexcept;
    /// The set is closed under the relation: x in A and x R y imply y in A.
    [[nodiscard]] bool is_upset( PointSet a ) const noexcept { return is_subset( image_of( a ), a ); }

    /// Classes of an equivalence relation, ordered by least member.
    [[nodiscard]] std::vector< PointSet > classes() const;

    friend bool operator==( const Relation&, const Relation& ) = default;

private:
    std::vector< PointSet > _rows;
};

} // namespace workbench
