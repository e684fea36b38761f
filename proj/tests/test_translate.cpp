#include "workbench/error.hpp"
#include "workbench/reproduce.hpp"
#include "workbench/search.hpp"
#include "workbench/semantics.hpp"
#include "workbench/structure.hpp"
#include "workbench/translate.hpp"

#include <doctest.h>

using namespace workbench;

namespace {

Formula cl( std::string_view text ) { return parse_formula( text, Lang::Cl ); }
Formula in( std::string_view text ) { return parse_formula( text, Lang::Int ); }

} // namespace

TEST_CASE( "letters are boxed" )
{
    CHECK( godel_translate( in( "p" ) ) == cl( "[]p" ) );
}

TEST_CASE( "falsum and verum are fixed" )
{
    CHECK( godel_translate( in( "false" ) ) == cl( "false" ) );
    CHECK( godel_translate( in( "true" ) ) == cl( "true" ) );
}

TEST_CASE( "translation of kur" )
{
    const Formula t = godel_translate( named_formula( "kur" ) );
    CHECK( t == cl( "[]([*][]~[]~[]p -> []~[]~[*][]p)" ) );
    CHECK( print_formula( t ) == "[]([]A []~[]~[]p -> []~[]~[]A []p)" );
}

TEST_CASE( "literal bottom form" )
{
    const TranslateOptions literal{ true };
    CHECK( godel_translate( in( "p -> q" ), literal ) == cl( "[](~[]p | []q)" ) );
    CHECK( godel_translate( in( "~p" ), literal ) == cl( "[](~[]p | false)" ) );
    CHECK( godel_translate( in( "p -> q" ) ) == cl( "[]([]p -> []q)" ) );
    CHECK( godel_translate( in( "~p" ) ) == cl( "[]~[]p" ) );
}

TEST_CASE( "connectives and quantifiers" )
{
    CHECK( godel_translate( in( "p & q" ) ) == cl( "[]p & []q" ) );
    CHECK( godel_translate( in( "p | q" ) ) == cl( "[]p | []q" ) );
    CHECK( godel_translate( in( "A p" ) ) == cl( "[]A []p" ) );
    CHECK( godel_translate( in( "E p" ) ) == cl( "E []p" ) );
}

TEST_CASE( "only int input" )
{
    CHECK_THROWS_AS( (void)godel_translate( cl( "p" ) ), Error );
    try
    {
        (void)godel_translate( cl( "[]p" ) );
    }
    catch ( const Error& e )
    {
        CHECK( e.module() == "translate" );
    }
}

TEST_CASE( "translate_valuation" )
{
    const Ms4Frame k = frame_k();
    const Valuation v = translate_valuation( { { "p", { "b" } } }, k );
    CHECK( v.at( "p" ) == singleton( 1 ) );
    CHECK( translate_valuation( { { "p", {} } }, frame_h() ).at( "p" ) == 0 );
    CHECK_THROWS_AS( (void)translate_valuation( { { "p", { "z" } } }, k ), Error );
}

TEST_CASE( "translations denote R-upsets on small frames" )
{
    std::mt19937_64 rng( 3 );
    std::vector< Formula > corpus;
    for ( int i = 0; i < 40; ++i )
        corpus.push_back( godel_translate( random_formula( rng, Lang::Int, 3, 2 ) ) );
    for ( std::size_t n = 1; n <= 3; ++n )
        for_each_ms4( n, [ & ]( const Ms4Frame& g ) {
            for ( const auto& t : corpus )
                for ( PointSet p = 0; p <= g.all(); ++p )
                {
                    const Valuation v{ { "p", p }, { "q", g.all() & ~p } };
                    const PointSet s = truth_set( g, v, t );
                    REQUIRE( g.r().is_upset( s ) );
                    REQUIRE( s == truth_set( g, v, Formula::box( t ) ) );
                }
        } );
}

TEST_CASE( "validity transfers along the skeleton" )
{
    const Formula kur = named_formula( "kur" );
    for ( std::size_t n = 1; n <= 3; ++n )
        for_each_ms4( n, [ & ]( const Ms4Frame& g ) {
            CAPTURE( g.id() );
            CHECK( is_valid( skeleton( g ).frame, kur ).valid == is_valid( g, godel_translate( kur ) ).valid );
        } );
}
