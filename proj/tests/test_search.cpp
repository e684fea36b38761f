#include "workbench/error.hpp"
#include "workbench/search.hpp"
#include "workbench/semantics.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace workbench;

namespace {

using Matrix = std::vector< std::vector< bool > >;

Matrix relation_from_bits( std::uint64_t bits, std::size_t n )
{
    Matrix m( n, std::vector< bool >( n ) );
    for ( std::size_t x = 0; x < n; ++x )
        for ( std::size_t y = 0; y < n; ++y )
            m[ x ][ y ] = ( ( bits >> ( x * n + y ) ) & 1U ) != 0;
    return m;
}

bool reflexive_transitive( const Matrix& m )
{
    const std::size_t n = m.size();
    for ( std::size_t x = 0; x < n; ++x )
    {
        if ( !m[ x ][ x ] )
            return false;
        for ( std::size_t y = 0; y < n; ++y )
            for ( std::size_t z = 0; z < n; ++z )
                if ( m[ x ][ y ] && m[ y ][ z ] && !m[ x ][ z ] )
                    return false;
    }
    return true;
}

bool antisymmetric( const Matrix& m )
{
    for ( std::size_t x = 0; x < m.size(); ++x )
        for ( std::size_t y = 0; y < m.size(); ++y )
            if ( x != y && m[ x ][ y ] && m[ y ][ x ] )
                return false;
    return true;
}

// Partitions as block labels, one label vector per partition.
std::vector< std::vector< std::size_t > > labelings( std::size_t n )
{
    std::set< std::vector< std::size_t > > seen;
    std::vector< std::size_t > label( n, 0 );
    std::size_t total = 1;
    for ( std::size_t i = 0; i < n; ++i )
        total *= n;
    for ( std::size_t code = 0; code < total; ++code )
    {
        std::size_t c = code;
        for ( auto& l : label )
        {
            l = c % n;
            c /= n;
        }
        // Renumber blocks by first occurrence.
        std::vector< std::size_t > renamed( n );
        std::vector< std::size_t > map( n, n );
        std::size_t next = 0;
        for ( std::size_t i = 0; i < n; ++i )
        {
            if ( map[ label[ i ] ] == n )
                map[ label[ i ] ] = next++;
            renamed[ i ] = map[ label[ i ] ];
        }
        seen.insert( renamed );
    }
    return { seen.begin(), seen.end() };
}

std::size_t naive_ms4_count( std::size_t n )
{
    std::size_t count = 0;
    const auto parts = labelings( n );
    for ( std::uint64_t bits = 0; bits < ( std::uint64_t{ 1 } << ( n * n ) ); ++bits )
    {
        const Matrix r = relation_from_bits( bits, n );
        if ( !reflexive_transitive( r ) )
            continue;
        for ( const auto& label : parts )
        {
            bool ok = true;
            for ( std::size_t x = 0; x < n; ++x )
                for ( std::size_t y = 0; y < n; ++y )
                    for ( std::size_t z = 0; z < n; ++z )
                    {
                        if ( label[ x ] != label[ y ] || !r[ y ][ z ] )
                            continue;
                        bool found = false;
                        for ( std::size_t u = 0; u < n; ++u )
                            found = found || ( r[ x ][ u ] && label[ u ] == label[ z ] );
                        ok = ok && found;
                    }
            count += ok ? 1 : 0;
        }
    }
    return count;
}

std::size_t naive_mipc_count( std::size_t n )
{
    std::size_t count = 0;
    const std::uint64_t limit = std::uint64_t{ 1 } << ( n * n );
    for ( std::uint64_t rb = 0; rb < limit; ++rb )
    {
        const Matrix r = relation_from_bits( rb, n );
        if ( !reflexive_transitive( r ) || !antisymmetric( r ) )
            continue;
        for ( std::uint64_t qb = 0; qb < limit; ++qb )
        {
            if ( ( rb & ~qb ) != 0 )
                continue;
            const Matrix q = relation_from_bits( qb, n );
            if ( !reflexive_transitive( q ) )
                continue;
            bool ok = true;
            for ( std::size_t x = 0; x < n; ++x )
                for ( std::size_t y = 0; y < n; ++y )
                {
                    if ( !q[ x ][ y ] )
                        continue;
                    bool found = false;
                    for ( std::size_t z = 0; z < n; ++z )
                        found = found || ( r[ x ][ z ] && q[ z ][ y ] && q[ y ][ z ] );
                    ok = ok && found;
                }
            count += ok ? 1 : 0;
        }
    }
    return count;
}

// Number of isomorphism classes among the labeled frames, by brute-force
// canonical forms over all permutations.
template < typename Frame, typename Key >
std::size_t naive_iso_classes( const std::vector< Frame >& frames, Key&& key )
{
    std::set< std::vector< bool > > forms;
    for ( const auto& f : frames )
    {
        std::vector< std::size_t > perm( f.size() );
        std::iota( perm.begin(), perm.end(), 0 );
        std::vector< bool > best;
        do
        {
            auto form = key( f, perm );
            if ( best.empty() || form < best )
                best = std::move( form );
        } while ( std::next_permutation( perm.begin(), perm.end() ) );
        forms.insert( best );
    }
    return forms.size();
}

std::vector< bool > ms4_form( const Ms4Frame& g, const std::vector< std::size_t >& perm )
{
    const std::size_t n = g.size();
    std::vector< bool > form( 2 * n * n );
    for ( std::size_t x = 0; x < n; ++x )
        for ( std::size_t y = 0; y < n; ++y )
        {
            form[ perm[ x ] * n + perm[ y ] ] = g.r().holds( x, y );
            form[ n * n + perm[ x ] * n + perm[ y ] ] = g.e().holds( x, y );
        }
    return form;
}

bool naive_gkp( const Ms4Frame& g )
{
    const auto qmax = maximal_points( g ).qmax;
    for ( std::size_t x = 0; x < g.size(); ++x )
        for ( std::size_t y = 0; y < g.size(); ++y )
            if ( contains( qmax, x ) && g.e().holds( x, y ) && !contains( qmax, y ) )
                return false;
    return true;
}

bool naive_lkp( const Ms4Frame& g )
{
    const auto qmax = maximal_points( g ).qmax;
    for ( std::size_t x = 0; x < g.size(); ++x )
    {
        if ( !contains( qmax, x ) )
            continue;
        bool found = false;
        for ( std::size_t y = 0; y < g.size(); ++y )
            if ( g.r().holds( x, y ) && g.r().holds( y, x ) && is_subset( g.e().image( y ), qmax ) )
                found = true;
        if ( !found )
            return false;
    }
    return true;
}

} // namespace

TEST_CASE( "enumeration counts match the naive filter" )
{
    const std::size_t ms4_expected[] = { 1, 8, 115 };
    const std::size_t mipc_expected[] = { 1, 6, 77 };
    for ( std::size_t n = 1; n <= 3; ++n )
    {
        CAPTURE( n );
        CHECK( naive_ms4_count( n ) == ms4_expected[ n - 1 ] );
        CHECK( naive_mipc_count( n ) == mipc_expected[ n - 1 ] );
        CHECK( enumerate_ms4( n ).size() == ms4_expected[ n - 1 ] );
        CHECK( enumerate_mipc( n ).size() == mipc_expected[ n - 1 ] );
    }
}

TEST_CASE( "enumeration order, ids and soundness" )
{
    CHECK( quasi_orders( 2 ).size() == 4 );
    CHECK( quasi_orders( 3 ).size() == 29 );
    CHECK( partitions( 3 ) == std::vector< std::vector< PointSet > >{
                                  { 0b111 }, { 0b011, 0b100 }, { 0b101, 0b010 }, { 0b001, 0b110 }, { 0b001, 0b010, 0b100 } } );
    CHECK( point_names( 3 ) == std::vector< std::string >{ "a", "b", "c" } );

    const auto two = enumerate_ms4( 2 );
    CHECK( two.front().r() == Relation::identity( 2 ) );
    CHECK( two.front().blocks() == std::vector< PointSet >{ 0b11 } );
    CHECK( two.front().id() == "ms4-n2-0" );
    CHECK( two.back().id() == "ms4-n2-7" );
    for ( std::size_t i = 0; i + 1 < two.size(); ++i )
        CHECK_FALSE( two[ i ] == two[ i + 1 ] );

    for ( const auto& g : enumerate_ms4( 3 ) )
        CHECK_NOTHROW( (void)Ms4Frame( g.points(), g.r(), g.blocks() ) );
    for ( const auto& f : enumerate_mipc( 3 ) )
        CHECK_NOTHROW( (void)MipcFrame( f.points(), f.r(), f.q() ) );
}

TEST_CASE( "enumeration guards" )
{
    CHECK_THROWS_AS( (void)enumerate_ms4( 0 ), Error );
    CHECK_THROWS_AS( (void)enumerate_ms4( 6 ), Error );
    CHECK_THROWS_AS( (void)enumerate_mipc( 3, { 2, false } ), Error );
}

TEST_CASE( "mod-iso enumeration keeps one frame per class" )
{
    for ( std::size_t n = 1; n <= 3; ++n )
    {
        const auto labeled = enumerate_ms4( n );
        const auto reduced = enumerate_ms4( n, { 5, true } );
        CHECK( reduced.size() == naive_iso_classes( labeled, ms4_form ) );
        CHECK( reduced.size() == naive_iso_classes( reduced, ms4_form ) );
    }
    CHECK( enumerate_ms4( 2, { 5, true } ).size() == 6 );
}

TEST_CASE( "classify H, K and the one-point frame" )
{
    const Profile h = classify( frame_h() );
    CHECK( h.frame_id() == "H" );
    CHECK_FALSE( h.at( "antisymmetric" ) );
    CHECK( h.at( "LKP" ) );
    CHECK_FALSE( h.at( "GKP" ) );
    CHECK( h.at( "lkur_ax" ) );
    CHECK_FALSE( h.at( "grz" ) );
    CHECK( h.at( "splitting" ) );
    CHECK( h.at( "ms4_valid" ) );
    CHECK_FALSE( h.at( "mipc_valid" ) );

    const Profile k = classify( frame_k() );
    CHECK( k.at( "antisymmetric" ) );
    CHECK_FALSE( k.at( "LKP" ) );
    CHECK_FALSE( k.at( "lkur_ax" ) );
    CHECK( k.at( "grz" ) );
    CHECK_FALSE( k.at( "splitting" ) );
    CHECK( k.at( "mipc_valid" ) );

    const Profile one = classify( enumerate_ms4( 1 ).front() );
    CHECK( one.fields().size() == profile_fields( FrameKind::Ms4 ).size() );
    for ( const auto& [ name, value ] : one.fields() )
    {
        CAPTURE( name );
        CHECK( value );
    }

    const Profile rho = classify( frame_rho_k() );
    CHECK( rho.at( "ms4_valid" ) );
    CHECK( rho.at( "mipc_valid" ) );
    CHECK_FALSE( rho.at( "KP" ) );
    CHECK_FALSE( rho.at( "kur" ) );
    CHECK_THROWS_AS( (void)rho.at( "grz" ), Error );
}

TEST_CASE( "classify computes only the requested fields" )
{
    ClassifyOptions options;
    options.only = { "grz", "LKP" };
    const Profile p = classify( frame_k(), options );
    CHECK( p.fields().size() == 2 );
    CHECK( p.has( "grz" ) );
    CHECK_FALSE( p.has( "GKP" ) );
}

TEST_CASE( "profiles agree with the correspondences" )
{
    for ( std::size_t n = 1; n <= 3; ++n )
        for_each_ms4( n, [ & ]( const Ms4Frame& g ) {
            const Profile p = classify( g );
            REQUIRE( p.at( "GKP" ) == p.at( "gkur_ax1" ) );
            REQUIRE( p.at( "GKP" ) == p.at( "kur" ) );
            REQUIRE( p.at( "GKP" ) == p.at( "KP" ) );
            REQUIRE( p.at( "LKP" ) == p.at( "lkur_ax" ) );
            REQUIRE( p.at( "LKP" ) == p.at( "splitting" ) );
            REQUIRE( p.at( "antisymmetric" ) == p.at( "grz" ) );
            REQUIRE( p.at( "GKP" ) == naive_gkp( g ) );
            REQUIRE( p.at( "LKP" ) == naive_lkp( g ) );
            REQUIRE( p.at( "left_comm" ) );
            if ( p.at( "gkur_ax1" ) )
                REQUIRE( p.at( "lkur_ax" ) );
        } );
}

TEST_CASE( "antisymmetric LKP frames satisfy GKP" )
{
    for ( std::size_t n = 1; n <= 4; ++n )
        for_each_ms4( n, [ & ]( const Ms4Frame& g ) {
            if ( is_antisymmetric( g ) && check_lkp( g ).valid )
                REQUIRE( check_gkp( g ).valid );
        } );
}

TEST_CASE( "predicates" )
{
    Profile p( "x", FrameKind::Ms4 );
    p.set( "LKP", true );
    p.set( "GKP", false );
    p.set( "grz", true );
    CHECK( Predicate::parse( "LKP & !GKP" )( p ) );
    CHECK_FALSE( Predicate::parse( "LKP & GKP" )( p ) );
    CHECK( Predicate::parse( "GKP | grz" )( p ) );
    CHECK( Predicate::parse( "!(GKP | !grz)" )( p ) );
    CHECK( Predicate::parse( "true" )( p ) );
    CHECK_FALSE( Predicate::parse( "false" )( p ) );
    CHECK( Predicate::parse( "GKP | LKP & grz" )( p ) );
    CHECK( Predicate::parse( "LKP & !GKP" ).fields() == std::set< std::string, std::less<> >{ "GKP", "LKP" } );
    CHECK( Predicate::parse( "KP & kur", FrameKind::Mipc ).kind() == FrameKind::Mipc );

    CHECK_THROWS_AS( (void)Predicate::parse( "LKP &" ), ParseError );
    CHECK_THROWS_AS( (void)Predicate::parse( "(LKP" ), ParseError );
    CHECK_THROWS_AS( (void)Predicate::parse( "LKP GKP" ), ParseError );
    CHECK_THROWS_AS( (void)Predicate::parse( "nonsense" ), Error );
    CHECK_THROWS_AS( (void)Predicate::parse( "grz", FrameKind::Mipc ), Error );
}

TEST_CASE( "minimal frames" )
{
    const auto lkp = find_minimal( Predicate::parse( "LKP & !GKP" ), 4 );
    REQUIRE( lkp.frame );
    const auto& g = std::get< Ms4Frame >( *lkp.frame );
    CHECK( g.size() == 3 );
    CHECK( naive_lkp( g ) );
    CHECK_FALSE( naive_gkp( g ) );
    REQUIRE( lkp.frames_scanned.size() == 3 );
    CHECK( lkp.frames_scanned[ 0 ] == 1 );
    CHECK( lkp.frames_scanned[ 1 ] == 8 );
    for ( std::size_t n = 1; n <= 2; ++n )
        for_each_ms4( n, [ & ]( const Ms4Frame& small ) { CHECK_FALSE( ( naive_lkp( small ) && !naive_gkp( small ) ) ); } );

    const auto grz = find_minimal( Predicate::parse( "grz & !lkur_ax" ), 4 );
    REQUIRE( grz.frame );
    const auto& k = std::get< Ms4Frame >( *grz.frame );
    CHECK( k.size() == 2 );
    CHECK( grz.frames_scanned == std::vector< std::uint64_t >{ 1, grz.frames_scanned[ 1 ] } );
    CHECK( is_valid( k, named_formula( "grz" ) ).valid );
    CHECK_FALSE( is_valid( k, named_formula( "lkur_ax" ) ).valid );
    CHECK( is_valid( enumerate_ms4( 1 ).front(), named_formula( "lkur_ax" ) ).valid );

    const auto other = find_minimal( Predicate::parse( "lkur_ax & !grz" ), 3 );
    REQUIRE( other.frame );
    CHECK( std::get< Ms4Frame >( *other.frame ).size() <= 3 );

    const auto none = find_minimal( Predicate::parse( "false" ), 3 );
    CHECK_FALSE( none.frame );
    CHECK( none.frames_scanned == std::vector< std::uint64_t >{ 1, 8, 115 } );

    const auto kp = find_minimal( Predicate::parse( "!KP", FrameKind::Mipc ), 3 );
    REQUIRE( kp.frame );
    CHECK( std::get< MipcFrame >( *kp.frame ).size() == 2 );
}

TEST_CASE( "minimal search does not depend on the thread count" )
{
    MinimalSearchOptions many;
    many.threads = 4;
    for ( const char* text : { "LKP & !GKP", "grz & !lkur_ax", "n_ax & !mckinsey", "!left_comm" } )
    {
        const Predicate p = Predicate::parse( text );
        const auto one = find_minimal( p, 3 );
        const auto four = find_minimal( p, 3, many );
        CHECK( one.frames_scanned == four.frames_scanned );
        CHECK( one.frame.has_value() == four.frame.has_value() );
        if ( one.frame && four.frame )
            CHECK( std::get< Ms4Frame >( *one.frame ).id() == std::get< Ms4Frame >( *four.frame ).id() );
    }
}
