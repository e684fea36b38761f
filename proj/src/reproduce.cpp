#include "workbench/reproduce.hpp"

#include "workbench/error.hpp"
#include "workbench/morphisms.hpp"
#include "workbench/parallel.hpp"
#include "workbench/search.hpp"
#include "workbench/semantics.hpp"
#include "workbench/structure.hpp"
#include "workbench/translate.hpp"

#include <atomic>
#include <chrono>
#include <functional>

namespace workbench {

Formula random_formula( std::mt19937_64& rng, Lang lang, std::size_t max_depth, std::size_t letter_count )
{
    auto pick = [ & ]( std::size_t n ) { return std::uniform_int_distribution< std::size_t >( 0, n - 1 )( rng ); };
    if ( max_depth == 0 || pick( 4 ) == 0 )
    {
        const std::size_t k = pick( letter_count + 1 );
        if ( k == letter_count )
            return pick( 2 ) == 0 ? Formula::falsum( lang ) : Formula::verum( lang );
        return Formula::letter( lang, std::string( 1, static_cast< char >( 'p' + k ) ) );
    }
    auto sub = [ & ] { return random_formula( rng, lang, max_depth - 1, letter_count ); };
    const std::size_t ops = lang == Lang::Int ? 6 : 8;
    switch ( pick( ops ) )
    {
    case 0: return Formula::negation( sub() );
    case 1: return Formula::conjunction( sub(), sub() );
    case 2: return Formula::disjunction( sub(), sub() );
    case 3: return Formula::implication( sub(), sub() );
    case 4: return Formula::forall( sub() );
    case 5: return Formula::exists( sub() );
    case 6: return Formula::box( sub() );
    default: return Formula::diamond( sub() );
    }
}

namespace {

template < typename Frame >
std::vector< Frame > frames_up_to( std::size_t max_n )
{
    std::vector< Frame > out;
    for ( std::size_t n = 1; n <= max_n; ++n )
    {
        if constexpr ( std::is_same_v< Frame, Ms4Frame > )
            for_each_ms4( n, [ & ]( const Ms4Frame& g ) { out.push_back( g ); } );
        else
            for_each_mipc( n, [ & ]( const MipcFrame& f ) { out.push_back( f ); } );
    }
    return out;
}

// Counts the indices in [0, count) for which `bad` holds.
std::size_t count_bad( std::size_t count, unsigned threads, const std::function< bool( std::size_t ) >& bad )
{
    std::atomic< std::size_t > total{ 0 };
    parallel_for( count, threads, [ & ]( std::size_t i ) {
        if ( bad( i ) )
            ++total;
    } );
    return total.load();
}

bool valid( const Ms4Frame& g, std::string_view name )
{
    Formula f = named_formula( name );
    if ( f.lang() == Lang::Int )
        f = godel_translate( f );
    return is_valid( g, f ).valid;
}

bool all_equal( std::initializer_list< bool > values )
{
    const bool first = *values.begin();
    for ( const bool v : values )
        if ( v != first )
            return false;
    return true;
}

std::string discrepancies( std::size_t bad, std::size_t total, const char* what )
{
    return std::to_string( total ) + " " + what + ", " + std::to_string( bad ) + " discrepancies";
}

CriterionResult frame_table( const ReproduceOptions& )
{
    const Profile k = classify( frame_k() );
    const Profile h = classify( frame_h() );
    const bool ok = k.at( "grz" ) && !k.at( "lkur_ax" ) && h.at( "lkur_ax" ) && !h.at( "grz" ) && !h.at( "GKP" ) &&
                    h.at( "LKP" );
    return { 1, "frame table for H and K", ok,
             std::string( "K: grz=" ) + ( k.at( "grz" ) ? "true" : "false" ) +
                 " lkur_ax=" + ( k.at( "lkur_ax" ) ? "true" : "false" ) + "; H: lkur_ax=" +
                 ( h.at( "lkur_ax" ) ? "true" : "false" ) + " grz=" + ( h.at( "grz" ) ? "true" : "false" ) +
                 " GKP=" + ( h.at( "GKP" ) ? "true" : "false" ) + " LKP=" + ( h.at( "LKP" ) ? "true" : "false" ) };
}

CriterionResult k_refutation( const ReproduceOptions& )
{
    const Ms4Frame k = frame_k();
    const CheckReport report = is_valid( k, named_formula( "lkur_ax" ) );
    const Valuation v{ { "p", k.names().set_of( { "b" } ) } };
    const PointSet lhs = truth_set( k, v, parse_formula( "[*]<>[]p", Lang::Cl ) );
    const PointSet rhs = truth_set( k, v, parse_formula( "<>A p", Lang::Cl ) );
    const bool canonical = report.counterexample && report.counterexample->point == "a" &&
                           report.counterexample->valuation ==
                               std::map< std::string, std::vector< std::string > >{ { "p", { "b" } } };
    const bool ok = !report.valid && canonical && lhs == k.all() && rhs == 0;
    std::string detail = report.counterexample ? "counterexample p={" : "no counterexample";
    if ( report.counterexample )
    {
        const auto& pts = report.counterexample->valuation.at( "p" );
        for ( std::size_t i = 0; i < pts.size(); ++i )
            detail += ( i ? "," : "" ) + pts[ i ];
        detail += "} at " + report.counterexample->point;
    }
    return { 2, "canonical refutation of lkur_ax on K", ok, detail };
}

CriterionResult translation_faithfulness( const ReproduceOptions& options )
{
    std::mt19937_64 rng( options.seed );
    std::vector< Formula > corpus{ named_formula( "kur" ) };
    while ( corpus.size() < 50 )
        corpus.push_back( random_formula( rng, Lang::Int, 3, 1 + rng() % 2 ) );
    std::vector< Formula > translated;
    for ( const auto& f : corpus )
        translated.push_back( godel_translate( f ) );

    const auto frames = frames_up_to< Ms4Frame >( 3 );
    const std::size_t bad = count_bad( frames.size(), options.threads, [ & ]( std::size_t i ) {
        const MipcFrame rho = skeleton( frames[ i ] ).frame;
        for ( std::size_t k = 0; k < corpus.size(); ++k )
            if ( is_valid( rho, corpus[ k ] ).valid != is_valid( frames[ i ], translated[ k ] ).valid )
                return true;
        return false;
    } );
    return { 3, "translation faithfulness on frames up to 3 points", bad == 0,
             discrepancies( bad, frames.size(), "frames x 50 formulas" ) };
}

CriterionResult correspondence( const ReproduceOptions& options )
{
    const auto frames = frames_up_to< Ms4Frame >( 4 );
    const std::size_t bad = count_bad( frames.size(), options.threads, [ & ]( std::size_t i ) {
        const Ms4Frame& g = frames[ i ];
        const bool gkp = check_gkp( g ).valid;
        const bool lkp = check_lkp( g ).valid;
        return !all_equal( { valid( g, "gkur_ax1" ), valid( g, "gkur_ax2" ), valid( g, "kur" ), gkp } ) ||
               !all_equal( { valid( g, "lkur_ax" ), valid( g, "lkur_ax2" ), lkp } ) ||
               !all_equal( { valid( g, "grz" ), is_antisymmetric( g ) } ) ||
               !all_equal( { valid( g, "n_ax" ), valid( g, "n_ax2" ), valid( g, "n_ax3" ) } );
    } );
    const auto mipc = frames_up_to< MipcFrame >( 4 );
    const Formula kur = named_formula( "kur" );
    const std::size_t bad_mipc = count_bad( mipc.size(), options.threads, [ & ]( std::size_t i ) {
        return is_valid( mipc[ i ], kur ).valid != check_kp( mipc[ i ] ).valid;
    } );
    return { 4, "correspondence suite on frames up to 4 points", bad == 0 && bad_mipc == 0,
             discrepancies( bad, frames.size(), "ms4 frames" ) + "; " +
                 discrepancies( bad_mipc, mipc.size(), "mipc frames" ) };
}

CriterionResult collapse( const ReproduceOptions& options )
{
    const auto frames = frames_up_to< Ms4Frame >( 4 );
    std::atomic< std::size_t > posetal{ 0 };
    std::atomic< std::size_t > mckinsey{ 0 };
    const std::size_t bad = count_bad( frames.size(), options.threads, [ & ]( std::size_t i ) {
        const Ms4Frame& g = frames[ i ];
        bool wrong = false;
        if ( is_antisymmetric( g ) )
        {
            ++posetal;
            wrong = !all_equal( { check_lkp( g ).valid, check_gkp( g ).valid, valid( g, "n_ax3" ) } );
        }
        if ( valid( g, "mckinsey" ) )
        {
            ++mckinsey;
            wrong = wrong || !all_equal( { valid( g, "lkur_ax" ), valid( g, "gkur_ax1" ), valid( g, "n_ax3" ) } );
        }
        return wrong;
    } );
    return { 5, "collapse on antisymmetric and McKinsey frames", bad == 0,
             std::to_string( posetal.load() ) + " antisymmetric, " + std::to_string( mckinsey.load() ) +
                 " mckinsey frames, " + std::to_string( bad ) + " discrepancies" };
}

CriterionResult construction_roundtrip( const ReproduceOptions& options )
{
    const auto frames = frames_up_to< MipcFrame >( 4 );
    const std::size_t bad = count_bad( frames.size(), options.threads, [ & ]( std::size_t i ) {
        try
        {
            const Ms4Frame ext = lkur_extend( frames[ i ] ).frame;
            const Ms4Frame again( ext.points(), ext.r(), ext.blocks() );
            return !check_lkp( again ).valid || !iso( skeleton( again ).frame, frames[ i ] );
        }
        catch ( const Error& )
        {
            return true;
        }
    } );
    const bool h_ok = iso( lkur_extend( skeleton( frame_k() ).frame ).frame, frame_h() ).has_value();
    return { 6, "LKur extension roundtrip", bad == 0 && h_ok,
             std::to_string( frames.size() ) + " mipc frames, " + std::to_string( bad ) + " failures; extension of rho K " +
                 ( h_ok ? "is" : "is not" ) + " isomorphic to H" };
}

CriterionResult splitting( const ReproduceOptions& options )
{
    const auto frames = frames_up_to< Ms4Frame >( 4 );
    const std::size_t bad = count_bad( frames.size(), options.threads, [ & ]( std::size_t i ) {
        return splitting_lkur_test( frames[ i ] ) != valid( frames[ i ], "lkur_ax" );
    } );
    return { 7, "splitting test against lkur_ax", bad == 0, discrepancies( bad, frames.size(), "ms4 frames" ) };
}

CriterionResult minimality( const ReproduceOptions& options )
{
    MinimalSearchOptions search;
    search.threads = options.threads;
    const auto lkp = find_minimal( Predicate::parse( "LKP & !GKP" ), 4, search );
    const auto grz = find_minimal( Predicate::parse( "grz & !lkur_ax" ), 4, search );

    bool ok = lkp.frame && grz.frame;
    std::string detail;
    if ( lkp.frame )
    {
        const auto& g = std::get< Ms4Frame >( *lkp.frame );
        ok = ok && g.size() == 3 && lkp.frames_scanned.size() == 3 && lkp.frames_scanned[ 1 ] == ms4_frame_counts[ 1 ] &&
             check_lkp( g ).valid && !check_gkp( g ).valid;
        detail += "LKP & !GKP: " + std::to_string( g.size() ) + " points (" + g.id() + ")";
    }
    if ( grz.frame )
    {
        const auto& g = std::get< Ms4Frame >( *grz.frame );
        ok = ok && g.size() == 2 && grz.frames_scanned.size() == 2 && grz.frames_scanned[ 0 ] == ms4_frame_counts[ 0 ] &&
             valid( g, "grz" ) && !valid( g, "lkur_ax" );
        detail += "; grz & !lkur_ax: " + std::to_string( g.size() ) + " points (" + g.id() + ")";
    }
    return { 8, "minimal separating frames", ok, detail };
}

// Every relation on n points, kept if reflexive and transitive, paired with
// every partition, kept if commutativity holds.
std::uint64_t naive_ms4_count( std::size_t n )
{
    const auto parts = partitions( n );
    std::uint64_t count = 0;
    for ( std::uint64_t bits = 0; bits < ( std::uint64_t{ 1 } << ( n * n ) ); ++bits )
    {
        auto r = [ & ]( std::size_t x, std::size_t y ) { return ( ( bits >> ( x * n + y ) ) & 1U ) != 0; };
        bool quasi = true;
        for ( std::size_t x = 0; x < n; ++x )
            quasi = quasi && r( x, x );
        for ( std::size_t x = 0; x < n; ++x )
            for ( std::size_t y = 0; y < n; ++y )
                for ( std::size_t z = 0; z < n; ++z )
                    quasi = quasi && !( r( x, y ) && r( y, z ) && !r( x, z ) );
        if ( !quasi )
            continue;
        for ( const auto& blocks : parts )
        {
            auto e = [ & ]( std::size_t x, std::size_t y ) {
                for ( const PointSet b : blocks )
                    if ( contains( b, x ) )
                        return contains( b, y );
                return false;
            };
            bool commutes = true;
            for ( std::size_t x = 0; x < n; ++x )
                for ( std::size_t y = 0; y < n; ++y )
                    for ( std::size_t z = 0; z < n; ++z )
                    {
                        if ( !e( x, y ) || !r( y, z ) )
                            continue;
                        bool found = false;
                        for ( std::size_t u = 0; u < n; ++u )
                            found = found || ( r( x, u ) && e( u, z ) );
                        commutes = commutes && found;
                    }
            if ( commutes )
                ++count;
        }
    }
    return count;
}

CriterionResult enumerator_oracle( const ReproduceOptions& )
{
    bool ok = true;
    std::string detail;
    for ( std::size_t n = 1; n <= 3; ++n )
    {
        const std::uint64_t naive = naive_ms4_count( n );
        const std::uint64_t listed = enumerate_ms4( n ).size();
        ok = ok && naive == listed && listed == ms4_frame_counts[ n - 1 ];
        detail += ( n > 1 ? ", " : "" ) + std::string( "n=" ) + std::to_string( n ) + ": " + std::to_string( listed );
    }
    return { 9, "labeled MS4 frame counts", ok, detail };
}

template < typename Frame >
Valuation random_valuation( std::mt19937_64& rng, const Frame& frame, std::size_t letter_count )
{
    Valuation v;
    std::vector< PointSet > candidates;
    if constexpr ( std::is_same_v< Frame, MipcFrame > )
        candidates = upsets( frame.r() );
    for ( std::size_t k = 0; k < letter_count; ++k )
    {
        const std::string letter( 1, static_cast< char >( 'p' + k ) );
        if constexpr ( std::is_same_v< Frame, MipcFrame > )
            v[ letter ] = candidates[ rng() % candidates.size() ];
        else
            v[ letter ] = static_cast< PointSet >( rng() ) & frame.all();
    }
    return v;
}

template < typename Frame >
bool pointwise_agrees( const Frame& frame, const Valuation& v, const Formula& f )
{
    const PointSet truth = truth_set( frame, v, f );
    for ( std::size_t x = 0; x < frame.size(); ++x )
        if ( contains( truth, x ) != satisfies( frame, v, f, x ) )
            return false;
    return true;
}

CriterionResult semantics_invariants( const ReproduceOptions& options )
{
    constexpr std::size_t formula_count = 200;
    constexpr std::size_t letter_count = 2;
    std::mt19937_64 rng( options.seed + 10 );
    std::vector< Formula > int_corpus;
    std::vector< Formula > cl_corpus;
    for ( std::size_t k = 0; k < formula_count; ++k )
    {
        int_corpus.push_back( random_formula( rng, Lang::Int, 4, letter_count ) );
        cl_corpus.push_back( random_formula( rng, Lang::Cl, 4, letter_count ) );
    }

    const auto mipc = frames_up_to< MipcFrame >( 4 );
    const std::size_t persistence = count_bad( mipc.size(), options.threads, [ & ]( std::size_t i ) {
        const MipcFrame& f = mipc[ i ];
        const auto ups = upsets( f.r() );
        for ( const auto& phi : int_corpus )
            for ( const PointSet p : ups )
                for ( const PointSet q : ups )
                    if ( !f.r().is_upset( truth_set( f, Valuation{ { "p", p }, { "q", q } }, phi ) ) )
                        return true;
        return false;
    } );

    const auto ms4 = frames_up_to< Ms4Frame >( 4 );
    const std::size_t pointwise_mipc = count_bad( mipc.size(), options.threads, [ & ]( std::size_t i ) {
        std::mt19937_64 local( options.seed + i );
        for ( const auto& phi : int_corpus )
            if ( !pointwise_agrees( mipc[ i ], random_valuation( local, mipc[ i ], letter_count ), phi ) )
                return true;
        return false;
    } );
    const std::size_t pointwise_ms4 = count_bad( ms4.size(), options.threads, [ & ]( std::size_t i ) {
        std::mt19937_64 local( options.seed + i );
        for ( const auto& phi : cl_corpus )
            if ( !pointwise_agrees( ms4[ i ], random_valuation( local, ms4[ i ], letter_count ), phi ) )
                return true;
        return false;
    } );
    const bool ok = persistence == 0 && pointwise_mipc == 0 && pointwise_ms4 == 0;
    return { 10, "persistence and operator/pointwise agreement", ok,
             std::to_string( mipc.size() ) + " mipc and " + std::to_string( ms4.size() ) + " ms4 frames x " +
                 std::to_string( formula_count ) + " formulas, " +
                 std::to_string( persistence + pointwise_mipc + pointwise_ms4 ) + " violations" };
}

} // namespace

CriterionResult run_criterion( int number, const ReproduceOptions& options )
{
    using Runner = CriterionResult ( * )( const ReproduceOptions& );
    static constexpr Runner runners[] = {
        frame_table, k_refutation, translation_faithfulness, correspondence,    collapse,
        construction_roundtrip, splitting, minimality,          enumerator_oracle, semantics_invariants,
    };
    if ( number < 1 || number > criterion_count )
        throw Error( "reproduce", "no criterion " + std::to_string( number ) );
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result = runners[ number - 1 ]( options );
    result.seconds = std::chrono::duration< double >( std::chrono::steady_clock::now() - start ).count();
    return result;
}

std::vector< CriterionResult > run_all_criteria( const ReproduceOptions& options )
{
    std::vector< CriterionResult > out;
    for ( int k = 1; k <= criterion_count; ++k )
        out.push_back( run_criterion( k, options ) );
    return out;
}

} // namespace workbench
