#pragma once

#include "workbench/frames.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace workbench {

/// A map from `domain` (a set of source points) into the target frame.
/// `image[x]` is meaningful only for x in `domain`.
struct PointMap
{
    std::string source_id;
    std::string target_id;
    PointSet domain = 0;
    std::vector< std::size_t > image;
};

/// Which morphism condition failed, and at which source point.
/// MS4: 2 = R back-and-forth, 3 = E back-and-forth.
/// MIPC: 2 = R, 3 = Q, 4 = Q^{-1}[f(x)] = R^{-1} f Q^{-1}[x].
struct MorphismVerdict
{
    bool ok = true;
    int failed_condition = 0;
    std::size_t point = 0;

    explicit operator bool() const noexcept { return ok; }
};

/// R_2[f(x)] = f R_1[x] and E_2[f(x)] = f E_1[x] for every x in the domain,
/// with R_1 and E_1 restricted to the domain.
[[nodiscard]] MorphismVerdict check_ms4_morphism( const PointMap& m, const Ms4Frame& src, const Ms4Frame& tgt );
[[nodiscard]] inline bool is_ms4_morphism( const PointMap& m, const Ms4Frame& src, const Ms4Frame& tgt )
{
    return check_ms4_morphism( m, src, tgt ).ok;
}

[[nodiscard]] MorphismVerdict check_mipc_morphism( const PointMap& m, const MipcFrame& src, const MipcFrame& tgt );
[[nodiscard]] inline bool is_mipc_morphism( const PointMap& m, const MipcFrame& src, const MipcFrame& tgt )
{
    return check_mipc_morphism( m, src, tgt ).ok;
}

/// Every set closed under Q = E∘R, in increasing bit-mask order (∅ first).
[[nodiscard]] std::vector< PointSet > q_upsets( const Ms4Frame& g );

struct MorphismSearchOptions
{
    /// Largest |target|^|domain| a single domain may require; 0 disables the guard.
    std::uint64_t cap = 10'000'000;
    /// Stop after this many morphisms; 0 means all.
    std::size_t limit = 0;
    unsigned threads = 1;
};

/// Every onto MS4 morphism from a nonempty Q-upset of `src` (or from `src`
/// itself when `from_q_upsets` is false) onto `tgt`. Domains follow
/// `q_upsets` order; maps within a domain are in lexicographic order of
/// their images. Throws Error (module "morphisms") when a domain exceeds
/// the cap.
[[nodiscard]] std::vector< PointMap > find_onto_morphisms( const Ms4Frame& src, const Ms4Frame& tgt,
                                                           bool from_q_upsets, MorphismSearchOptions options = {} );

/// True iff no Q-upset of `g` maps onto K.
[[nodiscard]] bool splitting_lkur_test( const Ms4Frame& g, MorphismSearchOptions options = {} );

} // namespace workbench
