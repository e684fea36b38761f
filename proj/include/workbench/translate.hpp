#pragma once

#include "workbench/formula.hpp"
#include "workbench/semantics.hpp"

#include <map>
#include <string>
#include <vector>

namespace workbench {

struct TranslateOptions
{
    /// Emit (φ → ψ)^t as □(¬φ^t ∨ ψ^t) and (¬φ)^t as □(¬φ^t ∨ ⊥) instead of
    /// the readable forms □(φ^t → ψ^t) and □¬φ^t.
    bool literal_bottom = false;
};

/// Gödel translation of an int formula into the cl language, with
/// (∀φ)^t = □∀φ^t and (∃φ)^t = ∃φ^t. Throws Error (module "translate")
/// if `f` is not an int formula.
[[nodiscard]] Formula godel_translate( const Formula& f, TranslateOptions options = {} );

/// Point-name valuation on an MS4 frame, as point sets. Throws Error
/// (module "translate") for a point the frame does not have.
[[nodiscard]] Valuation translate_valuation( const std::map< std::string, std::vector< std::string > >& v,
                                             const Ms4Frame& g );

} // namespace workbench
