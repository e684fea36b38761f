#include "workbench/error.hpp"
#include "workbench/formula.hpp"
#include "workbench/reproduce.hpp"

#include <doctest.h>

using namespace workbench;

namespace {

Formula p_int() { return Formula::letter( Lang::Int, "p" ); }
Formula p_cl() { return Formula::letter( Lang::Cl, "p" ); }

bool mentions( const Formula& f, Kind kind )
{
    if ( f.kind() == kind )
        return true;
    for ( std::size_t i = 0; i < f.arity(); ++i )
        if ( mentions( f.child( i ), kind ) )
            return true;
    return false;
}

} // namespace

TEST_CASE( "kur parses into the expected tree" )
{
    const Formula kur = parse_formula( "A ~ ~ p -> ~ ~ A p", Lang::Int );
    const Formula expected =
        Formula::implication( Formula::forall( Formula::negation( Formula::negation( p_int() ) ) ),
                              Formula::negation( Formula::negation( Formula::forall( p_int() ) ) ) );
    CHECK( kur == expected );
    CHECK( print_formula( kur ) == "A ~~p -> ~~A p" );
    CHECK( kur == named_formula( "kur" ) );
}

TEST_CASE( "single letter" )
{
    const Formula p = parse_formula( "p", Lang::Cl );
    CHECK( p.kind() == Kind::Letter );
    CHECK( p.name() == "p" );
    CHECK( p.arity() == 0 );
    CHECK( print_formula( p ) == "p" );
}

TEST_CASE( "modal operators are rejected in int" )
{
    CHECK_THROWS_AS( (void)parse_formula( "[] p", Lang::Int ), ParseError );
    try
    {
        (void)parse_formula( "q & [] p", Lang::Int );
        FAIL( "expected a parse error" );
    }
    catch ( const ParseError& e )
    {
        CHECK( e.module() == "syntax" );
        CHECK( e.offset() == 4 );
    }
    CHECK_THROWS_AS( (void)Formula::box( p_int() ), Error );
    CHECK_THROWS_AS( (void)Formula::conjunction( p_int(), p_cl() ), Error );
}

TEST_CASE( "grz prints with minimal parentheses" )
{
    const Formula grz = named_formula( "grz" );
    CHECK( print_formula( grz ) == "[]([](p -> []p) -> p) -> p" );
    CHECK( grz.depth() == 6 );
}

TEST_CASE( "precedence and associativity" )
{
    const Formula p = p_cl();
    const Formula q = Formula::letter( Lang::Cl, "q" );
    const Formula r = Formula::letter( Lang::Cl, "r" );
    CHECK( parse_formula( "p & q | r", Lang::Cl ) == Formula::disjunction( Formula::conjunction( p, q ), r ) );
    CHECK( parse_formula( "p | q & r", Lang::Cl ) == Formula::disjunction( p, Formula::conjunction( q, r ) ) );
    CHECK( parse_formula( "p -> q -> r", Lang::Cl ) == Formula::implication( p, Formula::implication( q, r ) ) );
    CHECK( parse_formula( "p & q & r", Lang::Cl ) == Formula::conjunction( Formula::conjunction( p, q ), r ) );
    CHECK( parse_formula( "~p -> q", Lang::Cl ) == Formula::implication( Formula::negation( p ), q ) );
    CHECK( print_formula( parse_formula( "(p -> q) -> r", Lang::Cl ) ) == "(p -> q) -> r" );
    CHECK( print_formula( parse_formula( "p & (q | r)", Lang::Cl ) ) == "p & (q | r)" );
}

TEST_CASE( "master modalities are sugar" )
{
    CHECK( parse_formula( "[*]p", Lang::Cl ) == Formula::box( Formula::forall( p_cl() ) ) );
    CHECK( parse_formula( "<*>p", Lang::Cl ) ==
           Formula::negation( Formula::box( Formula::forall( Formula::negation( p_cl() ) ) ) ) );
    CHECK( parse_formula( "[*]p", Lang::Cl ) == parse_formula( "[]A p", Lang::Cl ) );
}

TEST_CASE( "malformed input reports an offset" )
{
    CHECK_THROWS_AS( (void)parse_formula( "(p", Lang::Cl ), ParseError );
    CHECK_THROWS_AS( (void)parse_formula( "p ->", Lang::Cl ), ParseError );
    CHECK_THROWS_AS( (void)parse_formula( "p q", Lang::Cl ), ParseError );
    CHECK_THROWS_AS( (void)parse_formula( "", Lang::Cl ), ParseError );
    try
    {
        (void)parse_formula( "p & $", Lang::Cl );
        FAIL( "expected a parse error" );
    }
    catch ( const ParseError& e )
    {
        CHECK( e.offset() == 4 );
    }
}

TEST_CASE( "letters" )
{
    CHECK( letters( named_formula( "kur" ) ) == std::set< std::string >{ "p" } );
    CHECK( letters( parse_formula( "p & q", Lang::Cl ) ) == std::set< std::string >{ "p", "q" } );
    CHECK( letters( parse_formula( "false", Lang::Int ) ).empty() );
}

TEST_CASE( "registry" )
{
    CHECK( axiom_registry().size() == 11 );
    for ( const auto& nf : axiom_registry() )
    {
        CAPTURE( nf.name );
        const Formula f = named_formula( nf.name );
        CHECK( f.lang() == nf.lang );
        CHECK( letters( f ) == std::set< std::string >{ "p" } );
        CHECK( is_named_formula( nf.name ) );
    }
    CHECK( named_formula( "kur" ).lang() == Lang::Int );
    CHECK( named_formula( "lkur_ax" ) == parse_formula( "[]A <>[]p -> <>A p", Lang::Cl ) );
    CHECK( named_formula( "mckinsey" ) ==
           Formula::implication( Formula::box( Formula::diamond( p_cl() ) ), Formula::diamond( Formula::box( p_cl() ) ) ) );
    CHECK_FALSE( is_named_formula( "nope" ) );
    CHECK_THROWS_AS( (void)named_formula( "nope" ), Error );
}

TEST_CASE( "print then parse is the identity on random trees" )
{
    std::mt19937_64 rng( 7 );
    for ( int i = 0; i < 500; ++i )
    {
        const Lang lang = i % 2 == 0 ? Lang::Int : Lang::Cl;
        const Formula f = random_formula( rng, lang, 6, 3 );
        CAPTURE( print_formula( f ) );
        CHECK( f.depth() <= 6 );
        CHECK( parse_formula( print_formula( f ), lang ) == f );
    }
}

TEST_CASE( "expand_sugar is idempotent and removes sugar" )
{
    std::mt19937_64 rng( 11 );
    for ( int i = 0; i < 500; ++i )
    {
        const Lang lang = i % 2 == 0 ? Lang::Int : Lang::Cl;
        const Formula f = random_formula( rng, lang, 6, 2 );
        const Formula once = expand_sugar( f );
        CAPTURE( print_formula( f ) );
        CHECK( expand_sugar( once ) == once );
        CHECK_FALSE( mentions( once, Kind::Diamond ) );
        CHECK_FALSE( mentions( once, Kind::ClExists ) );
        if ( lang == Lang::Int )
            CHECK_FALSE( mentions( once, Kind::Not ) );
        CHECK( letters( once ) == letters( f ) );
    }
    CHECK( print_formula( expand_sugar( named_formula( "kur" ) ) ) ==
           "A ((p -> false) -> false) -> (A p -> false) -> false" );
}
