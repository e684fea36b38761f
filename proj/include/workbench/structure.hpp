#pragma once

#include "workbench/frames.hpp"

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace workbench {

using AnyFrame = std::variant< Ms4Frame, MipcFrame >;

/// ρG with its quotient map π: `quotient[y]` is the class of source point y.
struct Skeleton
{
    MipcFrame frame;
    std::vector< std::size_t > quotient;
};

/// Quotient of G by E_R with x R' y and x Q' y induced from R and E∘R.
/// Each class is named by its members joined with '+'.
[[nodiscard]] Skeleton skeleton( const Ms4Frame& g );

/// The frame built over F plus a primed copy of max F. `projection[y]` is
/// the point of F that y stands for (itself, or the original of a copy).
struct LkurExtension
{
    Ms4Frame frame;
    std::vector< std::size_t > projection;
};

[[nodiscard]] LkurExtension lkur_extend( const MipcFrame& f );

/// (X, R, E_Q).
[[nodiscard]] Ms4Frame mipc_to_ms4( const MipcFrame& f );

/// (Y, R, E∘R); throws Error (module "structure") unless R is a partial order.
[[nodiscard]] MipcFrame ms4_to_mipc( const Ms4Frame& g );

/// "H", "K" or "rhoK"; throws Error (module "structure") otherwise.
[[nodiscard]] AnyFrame builtin( std::string_view name );
[[nodiscard]] Ms4Frame frame_h();
[[nodiscard]] Ms4Frame frame_k();
[[nodiscard]] MipcFrame frame_rho_k();

/// The generated subframe on `domain` (R and E restricted, names kept).
[[nodiscard]] Ms4Frame subframe( const Ms4Frame& g, PointSet domain );

/// A bijection that preserves and reflects every relation, as
/// `bijection[i]` = image of point i, or nothing.
[[nodiscard]] std::optional< std::vector< std::size_t > > iso( const Ms4Frame& a, const Ms4Frame& b );
[[nodiscard]] std::optional< std::vector< std::size_t > > iso( const MipcFrame& a, const MipcFrame& b );

} // namespace workbench
