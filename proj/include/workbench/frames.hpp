#pragma once

#include "workbench/relation.hpp"
#include "workbench/report.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace workbench {

struct ValidateOptions
{
    /// Replace R (and Q) by their reflexive-transitive closure before checking.
    bool close = false;
};

/// Frame data as read from a file, before any condition is checked.
struct RawFrame
{
    std::string kind; // "ms4" or "mipc"
    std::vector< std::string > points;
    std::vector< std::pair< std::string, std::string > > r;
    std::vector< std::pair< std::string, std::string > > q;
    std::vector< std::vector< std::string > > e;
};

/// Shared point bookkeeping of both frame kinds.
class PointNames
{
public:
    PointNames() = default;
    explicit PointNames( std::vector< std::string > names );

    [[nodiscard]] const std::vector< std::string >& points() const noexcept { return _names; }
    [[nodiscard]] std::size_t size() const noexcept { return _names.size(); }
    [[nodiscard]] const std::string& name( std::size_t i ) const { return _names.at( i ); }
    /// Throws FrameError for an unknown name.
    [[nodiscard]] std::size_t index_of( std::string_view name ) const;
    [[nodiscard]] std::vector< std::string > names_of( PointSet s ) const;
    [[nodiscard]] PointSet set_of( const std::vector< std::string >& names ) const;

    friend bool operator==( const PointNames&, const PointNames& ) = default;

private:
    std::vector< std::string > _names;
};

/// (Y, R, E): R a quasi-order, E an equivalence given by its blocks, and
/// xEy, yRz imply xRu, uEz for some u. Immutable once constructed.
class Ms4Frame
{
public:
    /// Validates and throws FrameError naming the failed condition:
    /// 1 quasi-order, 2 partition, 3 commutativity (witness x, y, z).
    Ms4Frame( std::vector< std::string > points, Relation r, std::vector< PointSet > blocks,
              ValidateOptions options = {} );

    [[nodiscard]] const PointNames& names() const noexcept { return _names; }
    [[nodiscard]] const std::vector< std::string >& points() const noexcept { return _names.points(); }
    [[nodiscard]] std::size_t size() const noexcept { return _names.size(); }
    [[nodiscard]] PointSet all() const noexcept { return full_set( size() ); }

    [[nodiscard]] const Relation& r() const noexcept { return _r; }
    [[nodiscard]] const Relation& e() const noexcept { return _e; }
    /// Q = E∘R: x Q y iff x R z and z E y for some z.
    [[nodiscard]] const Relation& q() const noexcept { return _q; }
    /// Blocks of E ordered by least member.
    [[nodiscard]] const std::vector< PointSet >& blocks() const noexcept { return _blocks; }

    [[nodiscard]] const std::string& id() const noexcept { return _id; }
    void set_id( std::string id ) { _id = std::move( id ); }

    friend bool operator==( const Ms4Frame& a, const Ms4Frame& b )
    {
        return a._names == b._names && a._r == b._r && a._e == b._e;
    }

private:
    PointNames _names;
    Relation _r;
    Relation _e;
    Relation _q;
    std::vector< PointSet > _blocks;
    std::string _id;
};

/// (X, R, Q): R a partial order, Q a quasi-order containing R, and xQy
/// implies xRz, z E_Q y for some z.
class MipcFrame
{
public:
    /// Validates and throws FrameError naming the failed condition 1-4.
    MipcFrame( std::vector< std::string > points, Relation r, Relation q, ValidateOptions options = {} );

    [[nodiscard]] const PointNames& names() const noexcept { return _names; }
    [[nodiscard]] const std::vector< std::string >& points() const noexcept { return _names.points(); }
    [[nodiscard]] std::size_t size() const noexcept { return _names.size(); }
    [[nodiscard]] PointSet all() const noexcept { return full_set( size() ); }

    [[nodiscard]] const Relation& r() const noexcept { return _r; }
    [[nodiscard]] const Relation& q() const noexcept { return _q; }
    [[nodiscard]] const Relation& e_q() const noexcept { return _e_q; }

    [[nodiscard]] const std::string& id() const noexcept { return _id; }
    void set_id( std::string id ) { _id = std::move( id ); }

    friend bool operator==( const MipcFrame& a, const MipcFrame& b )
    {
        return a._names == b._names && a._r == b._r && a._q == b._q;
    }

private:
    PointNames _names;
    Relation _r;
    Relation _q;
    Relation _e_q;
    std::string _id;
};

[[nodiscard]] Ms4Frame validate_ms4( const RawFrame& raw, ValidateOptions options = {} );
[[nodiscard]] MipcFrame validate_mipc( const RawFrame& raw, ValidateOptions options = {} );

struct DerivedRelations
{
    Relation e_r; ///< x E_R y iff xRy and yRx
    Relation e_q; ///< x E_Q y iff xQy and yQx
    Relation q;   ///< E∘R on an MS4 frame, Q itself on an MIPC frame
};

[[nodiscard]] DerivedRelations derived_relations( const Ms4Frame& g );
[[nodiscard]] DerivedRelations derived_relations( const MipcFrame& f );

struct MaximalPoints
{
    PointSet max = 0;
    PointSet qmax = 0;
};

[[nodiscard]] MaximalPoints maximal_points( const Relation& r );
[[nodiscard]] inline MaximalPoints maximal_points( const Ms4Frame& g ) { return maximal_points( g.r() ); }
[[nodiscard]] inline MaximalPoints maximal_points( const MipcFrame& f ) { return maximal_points( f.r() ); }

/// E_Q[max X] = max X; witness (x in max, y in E_Q[x] outside max).
[[nodiscard]] CheckReport check_kp( const MipcFrame& f );
/// E[qmax Y] = qmax Y; witness (x in qmax, y in E[x] outside qmax).
[[nodiscard]] CheckReport check_gkp( const Ms4Frame& g );
/// Every x in qmax has y in E_R[x] with E[y] inside qmax; witness x.
[[nodiscard]] CheckReport check_lkp( const Ms4Frame& g );

[[nodiscard]] bool is_antisymmetric( const Ms4Frame& g ) noexcept;

/// y, z in E[x] and yRz imply zRy.
[[nodiscard]] bool quasi_clean( const Ms4Frame& g, std::size_t x ) noexcept;

} // namespace workbench
