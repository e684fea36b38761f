#include "workbench/error.hpp"
#include "workbench/reproduce.hpp"
#include "workbench/search.hpp"
#include "workbench/semantics.hpp"
#include "workbench/structure.hpp"

#include <doctest.h>

using namespace workbench;

namespace {

Formula cl( std::string_view text ) { return parse_formula( text, Lang::Cl ); }
Formula in( std::string_view text ) { return parse_formula( text, Lang::Int ); }

// Direct reading of the satisfaction clauses over explicit point loops.
bool naive_ms4( const Ms4Frame& g, const Valuation& v, const Formula& f, std::size_t x )
{
    const std::size_t n = g.size();
    auto all_r = [ & ]( auto&& pred ) {
        for ( std::size_t y = 0; y < n; ++y )
            if ( g.r().holds( x, y ) && !pred( y ) )
                return false;
        return true;
    };
    auto all_e = [ & ]( auto&& pred ) {
        for ( std::size_t y = 0; y < n; ++y )
            if ( g.e().holds( x, y ) && !pred( y ) )
                return false;
        return true;
    };
    auto sub = [ & ]( std::size_t i ) { return [ &, i ]( std::size_t y ) { return naive_ms4( g, v, f.child( i ), y ); }; };
    switch ( f.kind() )
    {
    case Kind::Falsum: return false;
    case Kind::Verum: return true;
    case Kind::Letter: return contains( v.at( f.name() ), x );
    case Kind::Not: return !naive_ms4( g, v, f.child( 0 ), x );
    case Kind::And: return naive_ms4( g, v, f.lhs(), x ) && naive_ms4( g, v, f.rhs(), x );
    case Kind::Or: return naive_ms4( g, v, f.lhs(), x ) || naive_ms4( g, v, f.rhs(), x );
    case Kind::Implies: return !naive_ms4( g, v, f.lhs(), x ) || naive_ms4( g, v, f.rhs(), x );
    case Kind::Box: return all_r( sub( 0 ) );
    case Kind::Diamond: return !all_r( [ & ]( std::size_t y ) { return !sub( 0 )( y ); } );
    case Kind::ClForall: return all_e( sub( 0 ) );
    case Kind::ClExists: return !all_e( [ & ]( std::size_t y ) { return !sub( 0 )( y ); } );
    default: break;
    }
    FAIL( "unexpected node" );
    return false;
}

bool naive_mipc( const MipcFrame& m, const Valuation& v, const Formula& f, std::size_t x )
{
    const std::size_t n = m.size();
    auto every = [ & ]( const Relation& rel, auto&& pred ) {
        for ( std::size_t y = 0; y < n; ++y )
            if ( rel.holds( x, y ) && !pred( y ) )
                return false;
        return true;
    };
    auto at = [ & ]( const Formula& sub ) { return [ &m, &v, &sub ]( std::size_t y ) { return naive_mipc( m, v, sub, y ); }; };
    switch ( f.kind() )
    {
    case Kind::Falsum: return false;
    case Kind::Verum: return true;
    case Kind::Letter: return contains( v.at( f.name() ), x );
    case Kind::Not: return every( m.r(), [ & ]( std::size_t y ) { return !at( f.child( 0 ) )( y ); } );
    case Kind::And: return naive_mipc( m, v, f.lhs(), x ) && naive_mipc( m, v, f.rhs(), x );
    case Kind::Or: return naive_mipc( m, v, f.lhs(), x ) || naive_mipc( m, v, f.rhs(), x );
    case Kind::Implies:
        return every( m.r(), [ & ]( std::size_t y ) { return !at( f.lhs() )( y ) || at( f.rhs() )( y ); } );
    case Kind::IntForall: return every( m.q(), at( f.child( 0 ) ) );
    case Kind::IntExists: {
        for ( std::size_t y = 0; y < n; ++y )
            if ( m.q().holds( x, y ) && m.q().holds( y, x ) && at( f.child( 0 ) )( y ) )
                return true;
        return false;
    }
    default: break;
    }
    FAIL( "unexpected node" );
    return false;
}

// First refuting single-letter valuation, by brute force over subsets.
std::optional< std::pair< PointSet, std::size_t > > naive_refutation( const Ms4Frame& g, const Formula& f )
{
    for ( PointSet p = 0; p <= g.all(); ++p )
        for ( std::size_t x = 0; x < g.size(); ++x )
            if ( !naive_ms4( g, { { "p", p } }, f, x ) )
                return std::make_pair( p, x );
    return std::nullopt;
}

} // namespace

TEST_CASE( "modal images on K" )
{
    const Ms4Frame k = frame_k();
    const PointSet b = singleton( 1 );
    CHECK( modal_image( k, ModalOp::Diamond, b ) == k.all() );
    CHECK( modal_image( k, ModalOp::Forall, b ) == 0 );
    CHECK( modal_image( k, ModalOp::Box, b ) == b );
    CHECK( modal_image( k, ModalOp::Exists, b ) == k.all() );
    CHECK( modal_image( k, ModalOp::MasterDiamond, b ) == k.all() );
    CHECK( modal_image( k, ModalOp::MasterBox, b ) == 0 );
    CHECK( modal_image( frame_h(), ModalOp::Box, frame_h().all() ) == frame_h().all() );
    CHECK( modal_image( frame_rho_k(), ModalOp::Diamond, b ) == 0b11 );
    CHECK_THROWS_AS( (void)modal_image( frame_rho_k(), ModalOp::Forall, b ), Error );
}

TEST_CASE( "truth sets on K" )
{
    const Ms4Frame k = frame_k();
    const Valuation v{ { "p", singleton( 1 ) } };
    CHECK( truth_set( k, v, cl( "[*]<>[]p" ) ) == k.all() );
    CHECK( truth_set( k, v, cl( "<>A p" ) ) == 0 );
    CHECK( truth_set( k, v, cl( "true" ) ) == k.all() );
    CHECK( truth_set( k, {}, cl( "true" ) ) == k.all() );
}

TEST_CASE( "semantic errors" )
{
    CHECK_THROWS_AS( (void)truth_set( frame_k(), {}, in( "p" ) ), Error );
    CHECK_THROWS_AS( (void)truth_set( frame_rho_k(), {}, cl( "p" ) ), Error );
    CHECK_THROWS_AS( (void)truth_set( frame_k(), {}, cl( "p" ) ), Error );
    CHECK_THROWS_AS( (void)truth_set( frame_rho_k(), { { "p", singleton( 0 ) } }, in( "p" ) ), Error );
    CHECK_THROWS_AS( (void)truth_set( frame_k(), { { "p", singleton( 5 ) } }, cl( "p" ) ), Error );
    CHECK_THROWS_AS( (void)is_valid( frame_k(), in( "p" ) ), Error );
    try
    {
        (void)is_valid( frame_rho_k(), cl( "p" ) );
    }
    catch ( const Error& e )
    {
        CHECK( e.module() == "semantics" );
    }
}

TEST_CASE( "existential clause on mipc frames is conjunctive" )
{
    const MipcFrame rho = frame_rho_k();
    CHECK( truth_set( rho, { { "p", singleton( 1 ) } }, in( "E p" ) ) == rho.all() );
    CHECK( truth_set( rho, { { "p", 0 } }, in( "E p" ) ) == 0 );
    const MipcFrame chain( { "a", "b" }, rho.r(), rho.r() );
    CHECK( truth_set( chain, { { "p", singleton( 1 ) } }, in( "E p" ) ) == singleton( 1 ) );
    CHECK( truth_set( chain, { { "p", singleton( 1 ) } }, in( "A p" ) ) == singleton( 1 ) );
    CHECK( truth_set( rho, { { "p", singleton( 1 ) } }, in( "A p" ) ) == 0 );
}

TEST_CASE( "lkur_ax on K: canonical counterexample" )
{
    const CheckReport r = is_valid( frame_k(), named_formula( "lkur_ax" ) );
    CHECK_FALSE( r.valid );
    REQUIRE( r.counterexample );
    CHECK( r.counterexample->valuation == std::map< std::string, std::vector< std::string > >{ { "p", { "b" } } } );
    CHECK( r.counterexample->point == "a" );
    CHECK( r.valuations_tried == 3 );
    CHECK_FALSE( static_cast< bool >( r ) );
}

TEST_CASE( "validity of H and K" )
{
    CHECK( is_valid( frame_h(), named_formula( "lkur_ax" ) ).valid );
    CHECK( is_valid( frame_k(), named_formula( "grz" ) ).valid );
    CHECK( is_valid( frame_k(), named_formula( "grz" ) ).valuations_tried == 4 );

    const Formula grz = named_formula( "grz" );
    const CheckReport h = is_valid( frame_h(), grz );
    CHECK_FALSE( h.valid );
    const auto oracle = naive_refutation( frame_h(), grz );
    REQUIRE( oracle );
    REQUIRE( h.counterexample );
    CHECK( h.counterexample->valuation.at( "p" ) == frame_h().names().names_of( oracle->first ) );
    CHECK( h.counterexample->point == frame_h().names().name( oracle->second ) );
    CHECK( h.valuations_tried == oracle->first + 1 );
}

TEST_CASE( "validity agrees with the naive clauses on small frames" )
{
    std::mt19937_64 rng( 5 );
    std::vector< Formula > corpus;
    for ( const auto& nf : axiom_registry() )
        if ( nf.lang == Lang::Cl )
            corpus.push_back( named_formula( nf.name ) );
    for ( int i = 0; i < 30; ++i )
        corpus.push_back( random_formula( rng, Lang::Cl, 3, 1 ) );
    for ( std::size_t n = 1; n <= 3; ++n )
        for_each_ms4( n, [ & ]( const Ms4Frame& g ) {
            for ( const auto& f : corpus )
            {
                const auto oracle = naive_refutation( g, f );
                const CheckReport r = is_valid( g, f );
                REQUIRE( r.valid == !oracle.has_value() );
                if ( oracle )
                {
                    REQUIRE( r.counterexample );
                    CHECK( r.counterexample->point == g.names().name( oracle->second ) );
                }
            }
        } );
}

TEST_CASE( "operator and pointwise routes agree" )
{
    std::mt19937_64 rng( 9 );
    for ( std::size_t n = 1; n <= 3; ++n )
    {
        for_each_ms4( n, [ & ]( const Ms4Frame& g ) {
            for ( int i = 0; i < 20; ++i )
            {
                const Formula f = random_formula( rng, Lang::Cl, 4, 2 );
                const Valuation v{ { "p", static_cast< PointSet >( rng() ) & g.all() },
                                   { "q", static_cast< PointSet >( rng() ) & g.all() } };
                const PointSet s = truth_set( g, v, f );
                for ( std::size_t x = 0; x < g.size(); ++x )
                {
                    REQUIRE( contains( s, x ) == satisfies( g, v, f, x ) );
                    REQUIRE( contains( s, x ) == naive_ms4( g, v, f, x ) );
                }
            }
        } );
        for_each_mipc( n, [ & ]( const MipcFrame& m ) {
            const auto ups = upsets( m.r() );
            for ( int i = 0; i < 20; ++i )
            {
                const Formula f = random_formula( rng, Lang::Int, 4, 2 );
                const Valuation v{ { "p", ups[ rng() % ups.size() ] }, { "q", ups[ rng() % ups.size() ] } };
                const PointSet s = truth_set( m, v, f );
                REQUIRE( m.r().is_upset( s ) );
                for ( std::size_t x = 0; x < m.size(); ++x )
                {
                    REQUIRE( contains( s, x ) == satisfies( m, v, f, x ) );
                    REQUIRE( contains( s, x ) == naive_mipc( m, v, f, x ) );
                }
            }
        } );
    }
}

TEST_CASE( "upsets are listed in bit-mask order" )
{
    CHECK( upsets( frame_k().r() ) == std::vector< PointSet >{ 0b00, 0b10, 0b11 } );
    CHECK( upsets( Relation::identity( 2 ) ) == std::vector< PointSet >{ 0, 1, 2, 3 } );
    CHECK( upsets( Relation::universal( 3 ) ) == std::vector< PointSet >{ 0, 0b111 } );
}

TEST_CASE( "kur on mipc frames" )
{
    CHECK_FALSE( is_valid( frame_rho_k(), named_formula( "kur" ) ).valid );
    const MipcFrame chain( { "a", "b" }, frame_rho_k().r(), frame_rho_k().r() );
    CHECK( is_valid( chain, named_formula( "kur" ) ).valid );
}

TEST_CASE( "large valuation spaces are refused unless allowed" )
{
    const Ms4Frame g( { "a", "b", "c", "d", "e" }, Relation::identity( 5 ), { 0b11111 } );
    const Formula f = cl( "p | q | r | s | t | ~p" );
    CHECK_THROWS_AS( (void)is_valid( g, f ), Error );
    const Formula four = cl( "p | q | r | s | ~p" );
    CHECK( is_valid( g, four ).valid );
    CHECK( is_valid( g, f, { 1, true } ).valid );
}

TEST_CASE( "reports do not depend on the thread count" )
{
    std::mt19937_64 rng( 13 );
    const auto frames = enumerate_ms4( 4 );
    for ( int i = 0; i < 60; ++i )
    {
        const Formula f = random_formula( rng, Lang::Cl, 4, 3 );
        const Ms4Frame& g = frames[ rng() % frames.size() ];
        const CheckReport one = is_valid( g, f, { 1, false } );
        const CheckReport many = is_valid( g, f, { 4, false } );
        CHECK( one.valid == many.valid );
        CHECK( one.valuations_tried == many.valuations_tried );
        if ( one.counterexample && many.counterexample )
        {
            CHECK( one.counterexample->valuation == many.counterexample->valuation );
            CHECK( one.counterexample->point == many.counterexample->point );
        }
    }
}
