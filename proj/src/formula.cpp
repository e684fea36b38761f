#include "workbench/formula.hpp"

#include "workbench/error.hpp"

#include <algorithm>

namespace workbench {

struct Formula::Node
{
    Kind kind;
    Lang lang;
    std::string name;
    std::vector< Formula > children;
    std::size_t depth;
};

std::string_view to_string( Lang lang ) noexcept
{
    return lang == Lang::Int ? "int" : "cl";
}

std::string_view to_string( Kind kind ) noexcept
{
    switch ( kind )
    {
    case Kind::Falsum: return "falsum";
    case Kind::Verum: return "verum";
    case Kind::Letter: return "letter";
    case Kind::Not: return "not";
    case Kind::And: return "and";
    case Kind::Or: return "or";
    case Kind::Implies: return "implies";
    case Kind::Box: return "box";
    case Kind::Diamond: return "diamond";
    case Kind::IntForall: return "int-forall";
    case Kind::IntExists: return "int-exists";
    case Kind::ClForall: return "cl-forall";
    case Kind::ClExists: return "cl-exists";
    }
    return "?";
}

namespace {

bool allowed_in( Kind kind, Lang lang )
{
    switch ( kind )
    {
    case Kind::Box:
    case Kind::Diamond:
    case Kind::ClForall:
    case Kind::ClExists:
        return lang == Lang::Cl;
    case Kind::IntForall:
    case Kind::IntExists:
        return lang == Lang::Int;
    default:
        return true;
    }
}

} // namespace

Formula Formula::make( Kind kind, Lang lang, std::vector< Formula > children, std::string name )
{
    if ( !allowed_in( kind, lang ) )
        throw Error( "syntax", std::string( to_string( kind ) ) + " is not part of the " +
                                   std::string( to_string( lang ) ) + " language" );
    std::size_t depth = 0;
    for ( const auto& c : children )
    {
        if ( c.lang() != lang )
            throw Error( "syntax", "cannot combine int and cl formulas" );
        depth = std::max( depth, c.depth() + 1 );
    }
    return Formula( std::make_shared< const Node >(
        Node{ kind, lang, std::move( name ), std::move( children ), depth } ) );
}

Formula Formula::falsum( Lang lang ) { return make( Kind::Falsum, lang, {} ); }
Formula Formula::verum( Lang lang ) { return make( Kind::Verum, lang, {} ); }

Formula Formula::letter( Lang lang, std::string name )
{
    if ( name.empty() )
        throw Error( "syntax", "empty letter name" );
    return make( Kind::Letter, lang, {}, std::move( name ) );
}

Formula Formula::negation( Formula f )
{
    const Lang lang = f.lang();
    return make( Kind::Not, lang, { std::move( f ) } );
}

Formula Formula::conjunction( Formula lhs, Formula rhs )
{
    const Lang lang = lhs.lang();
    return make( Kind::And, lang, { std::move( lhs ), std::move( rhs ) } );
}

Formula Formula::disjunction( Formula lhs, Formula rhs )
{
    const Lang lang = lhs.lang();
    return make( Kind::Or, lang, { std::move( lhs ), std::move( rhs ) } );
}

Formula Formula::implication( Formula lhs, Formula rhs )
{
    const Lang lang = lhs.lang();
    return make( Kind::Implies, lang, { std::move( lhs ), std::move( rhs ) } );
}

Formula Formula::box( Formula f )
{
    const Lang lang = f.lang();
    return make( Kind::Box, lang, { std::move( f ) } );
}

Formula Formula::diamond( Formula f )
{
    const Lang lang = f.lang();
    return make( Kind::Diamond, lang, { std::move( f ) } );
}

Formula Formula::forall( Formula f )
{
    const Lang lang = f.lang();
    return make( lang == Lang::Int ? Kind::IntForall : Kind::ClForall, lang, { std::move( f ) } );
}

Formula Formula::exists( Formula f )
{
    const Lang lang = f.lang();
    return make( lang == Lang::Int ? Kind::IntExists : Kind::ClExists, lang, { std::move( f ) } );
}

Formula Formula::master_box( Formula f )
{
    if ( f.lang() != Lang::Cl )
        throw Error( "syntax", "[*] is not part of the int language" );
    return box( forall( std::move( f ) ) );
}

Formula Formula::master_diamond( Formula f )
{
    if ( f.lang() != Lang::Cl )
        throw Error( "syntax", "<*> is not part of the int language" );
    return negation( master_box( negation( std::move( f ) ) ) );
}

Kind Formula::kind() const noexcept { return _node->kind; }
Lang Formula::lang() const noexcept { return _node->lang; }
const std::string& Formula::name() const noexcept { return _node->name; }
std::size_t Formula::arity() const noexcept { return _node->children.size(); }
std::size_t Formula::depth() const noexcept { return _node->depth; }

const Formula& Formula::child( std::size_t i ) const
{
    return _node->children.at( i );
}

bool operator==( const Formula& a, const Formula& b ) noexcept
{
    if ( a._node == b._node )
        return true;
    return a.kind() == b.kind() && a.lang() == b.lang() && a.name() == b.name() &&
           a._node->children == b._node->children;
}

namespace {

void collect_letters( const Formula& f, std::set< std::string >& out )
{
    if ( f.kind() == Kind::Letter )
        out.insert( f.name() );
    for ( std::size_t i = 0; i < f.arity(); ++i )
        collect_letters( f.child( i ), out );
}

} // namespace

std::set< std::string > letters( const Formula& f )
{
    std::set< std::string > out;
    collect_letters( f, out );
    return out;
}

Formula expand_sugar( const Formula& f )
{
    switch ( f.kind() )
    {
    case Kind::Falsum:
    case Kind::Verum:
    case Kind::Letter:
        return f;
    case Kind::Not: {
        auto inner = expand_sugar( f.child( 0 ) );
        if ( f.lang() == Lang::Int )
            return Formula::implication( std::move( inner ), Formula::falsum( Lang::Int ) );
        return Formula::negation( std::move( inner ) );
    }
    case Kind::And: return Formula::conjunction( expand_sugar( f.lhs() ), expand_sugar( f.rhs() ) );
    case Kind::Or: return Formula::disjunction( expand_sugar( f.lhs() ), expand_sugar( f.rhs() ) );
    case Kind::Implies: return Formula::implication( expand_sugar( f.lhs() ), expand_sugar( f.rhs() ) );
    case Kind::Box: return Formula::box( expand_sugar( f.child( 0 ) ) );
    case Kind::Diamond:
        return Formula::negation( Formula::box( Formula::negation( expand_sugar( f.child( 0 ) ) ) ) );
    case Kind::IntForall:
    case Kind::ClForall:
        return Formula::forall( expand_sugar( f.child( 0 ) ) );
    case Kind::IntExists: return Formula::exists( expand_sugar( f.child( 0 ) ) );
    case Kind::ClExists:
        return Formula::negation( Formula::forall( Formula::negation( expand_sugar( f.child( 0 ) ) ) ) );
    }
    return f;
}

const std::vector< NamedFormula >& axiom_registry()
{
    static const std::vector< NamedFormula > registry = {
        { "kur", "A ~~p -> ~~A p", Lang::Int },
        { "grz", "[]([](p -> []p) -> p) -> p", Lang::Cl },
        { "lkur_ax", "[*]<>[]p -> <>A p", Lang::Cl },
        { "lkur_ax2", "[]E p -> <*>[]<>p", Lang::Cl },
        { "gkur_ax1", "[*]<>[]p -> <>[*]p", Lang::Cl },
        { "gkur_ax2", "[]<*>p -> <*>[]<>p", Lang::Cl },
        { "n_ax", "[]E p -> <>E []p", Lang::Cl },
        { "n_ax2", "[]E p -> <*>[]p", Lang::Cl },
        { "n_ax3", "[*]<>p -> <>A p", Lang::Cl },
        { "mckinsey", "[]<>p -> <>[]p", Lang::Cl },
        { "left_comm", "[]A p -> A []p", Lang::Cl },
    };
    return registry;
}

bool is_named_formula( std::string_view name ) noexcept
{
    const auto& reg = axiom_registry();
    return std::any_of( reg.begin(), reg.end(), [ & ]( const NamedFormula& nf ) { return nf.name == name; } );
}

Formula named_formula( std::string_view name )
{
    for ( const auto& nf : axiom_registry() )
        if ( nf.name == name )
            return parse_formula( nf.text, nf.lang );
    throw Error( "syntax", "unknown formula name '" + std::string( name ) + "'" );
}

} // namespace workbench
