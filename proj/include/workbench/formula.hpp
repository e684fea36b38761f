#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace workbench {

/// The two bimodal languages: intuitionistic with ∀/∃, classical with □/∀.
enum class Lang
{
    Int,
    Cl,
};

enum class Kind
{
    Falsum,
    Verum,
    Letter,
    Not,
    And,
    Or,
    Implies,
    Box,
    Diamond,
    IntForall,
    IntExists,
    ClForall,
    ClExists,
};

[[nodiscard]] std::string_view to_string( Lang lang ) noexcept;
[[nodiscard]] std::string_view to_string( Kind kind ) noexcept;

/// Immutable formula tree. Copies share structure, so a Formula is cheap
/// to pass by value and safe to share between threads.
///
/// The compound modalities are not node kinds: `master_box` builds □∀φ and
/// `master_diamond` builds ¬□∀¬φ. In the intuitionistic language `Not` is
/// kept as a node for printing but means φ → ⊥ everywhere else.
class Formula
{
public:
    [[nodiscard]] static Formula falsum( Lang lang );
    [[nodiscard]] static Formula verum( Lang lang );
    [[nodiscard]] static Formula letter( Lang lang, std::string name );
    [[nodiscard]] static Formula negation( Formula f );
    [[nodiscard]] static Formula conjunction( Formula lhs, Formula rhs );
    [[nodiscard]] static Formula disjunction( Formula lhs, Formula rhs );
    [[nodiscard]] static Formula implication( Formula lhs, Formula rhs );
    [[nodiscard]] static Formula box( Formula f );
    [[nodiscard]] static Formula diamond( Formula f );
    /// ∀ of the formula's own language.
    [[nodiscard]] static Formula forall( Formula f );
    /// ∃ of the formula's own language.
    [[nodiscard]] static Formula exists( Formula f );
    /// ■φ, stored as □∀φ.
    [[nodiscard]] static Formula master_box( Formula f );
    /// ◆φ, stored as ¬□∀¬φ.
    [[nodiscard]] static Formula master_diamond( Formula f );

    [[nodiscard]] Kind kind() const noexcept;
    [[nodiscard]] Lang lang() const noexcept;
    /// Letter name; empty for every other kind.
    [[nodiscard]] const std::string& name() const noexcept;
    [[nodiscard]] std::size_t arity() const noexcept;
    [[nodiscard]] const Formula& child( std::size_t i ) const;
    [[nodiscard]] const Formula& lhs() const { return child( 0 ); }
    [[nodiscard]] const Formula& rhs() const { return child( 1 ); }

    [[nodiscard]] std::size_t depth() const noexcept;

    friend bool operator==( const Formula& a, const Formula& b ) noexcept;

private:
    struct Node;
    explicit Formula( std::shared_ptr< const Node > node ) : _node{ std::move( node ) } {}
    static Formula make( Kind kind, Lang lang, std::vector< Formula > children, std::string name = {} );

    std::shared_ptr< const Node > _node;
};

/// Parses `text` under `lang`. Throws ParseError (module "syntax") with the
/// byte offset of the first offending token, including a modality that does
/// not belong to `lang`.
[[nodiscard]] Formula parse_formula( std::string_view text, Lang lang );

/// ASCII rendering with minimal parentheses; `parse_formula(print_formula(f),
/// f.lang())` reproduces `f` exactly.
[[nodiscard]] std::string print_formula( const Formula& f );

[[nodiscard]] std::set< std::string > letters( const Formula& f );

/// Rewrites ◇φ as ¬□¬φ, classical ∃φ as ¬∀¬φ and intuitionistic ¬φ as φ → ⊥.
[[nodiscard]] Formula expand_sugar( const Formula& f );

struct NamedFormula
{
    std::string name;
    std::string text;
    Lang lang;
};

/// The named axioms, in a fixed order.
[[nodiscard]] const std::vector< NamedFormula >& axiom_registry();

/// Throws Error (module "syntax") for an unknown name.
[[nodiscard]] Formula named_formula( std::string_view name );

[[nodiscard]] bool is_named_formula( std::string_view name ) noexcept;

} // namespace workbench
