#pragma once

#include "workbench/formula.hpp"
#include "workbench/frames.hpp"
#include "workbench/report.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace workbench {

/// Letter to point set. On an MIPC frame every set must be an R-upset.
using Valuation = std::map< std::string, PointSet, std::less<> >;

enum class ModalOp
{
    Diamond,       ///< R^{-1}[A]
    Box,           ///< { x : R[x] within A }
    Exists,        ///< E[A]
    Forall,        ///< { x : E[x] within A }
    MasterDiamond, ///< Q^{-1}[A]
    MasterBox,     ///< { x : Q[x] within A }
};

[[nodiscard]] PointSet modal_image( const Ms4Frame& g, ModalOp op, PointSet a );
/// Only ◇ and □ apply; the others throw Error (module "semantics").
[[nodiscard]] PointSet modal_image( const MipcFrame& f, ModalOp op, PointSet a );

/// Truth set by set operators. Throws Error (module "semantics") on a
/// language mismatch (cl on MS4, int on MIPC), a letter missing from `v`,
/// or (MIPC) a letter assigned a set that is not an R-upset.
[[nodiscard]] PointSet truth_set( const Ms4Frame& g, const Valuation& v, const Formula& f );
[[nodiscard]] PointSet truth_set( const MipcFrame& frame, const Valuation& v, const Formula& f );

/// Pointwise satisfaction by the quantifier clauses, independent of the
/// set-operator route in `truth_set`.
[[nodiscard]] bool satisfies( const Ms4Frame& g, const Valuation& v, const Formula& f, std::size_t x );
[[nodiscard]] bool satisfies( const MipcFrame& frame, const Valuation& v, const Formula& f, std::size_t x );

struct ValidityOptions
{
    unsigned threads = 1;
    /// Permit more than 2^24 candidate valuations (letters × points > 24).
    bool allow_large = false;
};

/// R-upsets of `r` in increasing order of their bit masks.
[[nodiscard]] std::vector< PointSet > upsets( const Relation& r );

/// Validity by enumerating every admissible valuation of the formula's
/// letters. Letters are taken in sorted order, the first varying fastest;
/// each letter runs through its candidate sets in increasing bit-mask order
/// (all subsets on MS4, R-upsets on MIPC). The first refuting valuation in
/// that order is reported, with the first point outside the truth set.
[[nodiscard]] CheckReport is_valid( const Ms4Frame& g, const Formula& f, ValidityOptions options = {} );
[[nodiscard]] CheckReport is_valid( const MipcFrame& frame, const Formula& f, ValidityOptions options = {} );

} // namespace workbench
