#include "workbench/error.hpp"
#include "workbench/formula.hpp"
#include "workbench/io.hpp"
#include "workbench/morphisms.hpp"
#include "workbench/parallel.hpp"
#include "workbench/reproduce.hpp"
#include "workbench/search.hpp"
#include "workbench/semantics.hpp"
#include "workbench/structure.hpp"
#include "workbench/translate.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>

using namespace workbench;

namespace {

constexpr int exit_false = 1;
constexpr int exit_usage = 2;

struct Args
{
    std::string frame;
    std::string target;
    std::string formula;
    std::string lang;
    std::string predicate;
    std::string condition;
    std::string kind = "ms4";
    bool json = false;
    bool close = false;
    bool mod_iso = false;
    bool literal_bottom = false;
    bool allow_large = false;
    bool whole = false;
    std::size_t max_n = 0;
    std::uint64_t cap = 0;
    std::size_t limit = 0;
    int criterion = 0;
};

unsigned thread_count()
{
    if ( const char* env = std::getenv( "WORKBENCH_THREADS" ) )
    {
        try
        {
            const unsigned long n = std::stoul( env );
            if ( n > 0 )
                return static_cast< unsigned >( n );
        }
        catch ( const std::exception& )
        {
        }
        throw Error( "cli", "WORKBENCH_THREADS must be a positive integer" );
    }
    return available_threads();
}

std::optional< Lang > lang_flag( const Args& a )
{
    if ( a.lang.empty() )
        return std::nullopt;
    if ( a.lang == "int" )
        return Lang::Int;
    if ( a.lang == "cl" )
        return Lang::Cl;
    throw Error( "cli", "--lang must be int or cl" );
}

FrameKind kind_flag( const Args& a )
{
    if ( a.kind == "ms4" )
        return FrameKind::Ms4;
    if ( a.kind == "mipc" )
        return FrameKind::Mipc;
    throw Error( "cli", "--kind must be ms4 or mipc" );
}

Formula formula_flag( const Args& a, Lang fallback )
{
    if ( a.formula.empty() )
        throw Error( "cli", "--formula is required" );
    if ( a.lang.empty() && is_named_formula( a.formula ) )
        return named_formula( a.formula );
    return parse_formula( a.formula, lang_flag( a ).value_or( fallback ) );
}

AnyFrame frame_flag( const std::string& source )
{
    if ( source.empty() )
        throw Error( "cli", "--frame is required" );
    return load_frame( source );
}

AnyFrame frame_flag( const Args& a )
{
    if ( a.frame.empty() )
        throw Error( "cli", "--frame is required" );
    return load_frame( a.frame, { a.close } );
}

void print_json( const Json& j )
{
    std::cout << j.dump() << '\n';
}

std::string set_text( const std::vector< std::string >& points )
{
    std::string out = "{";
    for ( std::size_t i = 0; i < points.size(); ++i )
        out += ( i ? "," : "" ) + points[ i ];
    return out + "}";
}

int cmd_parse( const Args& a )
{
    const Formula f = formula_flag( a, Lang::Cl );
    if ( a.json )
        print_json( { { "formula", print_formula( f ) },
                      { "lang", std::string( to_string( f.lang() ) ) },
                      { "depth", f.depth() },
                      { "letters", letters( f ) } } );
    else
        std::cout << print_formula( f ) << '\n';
    return 0;
}

int cmd_translate( const Args& a )
{
    const Formula t = godel_translate( formula_flag( a, Lang::Int ), { a.literal_bottom } );
    if ( a.json )
        print_json( { { "formula", print_formula( t ) }, { "lang", "cl" } } );
    else
        std::cout << print_formula( t ) << '\n';
    return 0;
}

int report_condition( const CheckReport& report, const Args& a )
{
    if ( a.json )
        print_json( report_to_json( report ) );
    else if ( report.valid )
        std::cout << report.formula << " holds\n";
    else
    {
        std::cout << report.formula << " fails, witness";
        for ( const auto& w : report.witness )
            std::cout << ' ' << w;
        std::cout << '\n';
    }
    return report.valid ? 0 : exit_false;
}

int cmd_check( const Args& a )
{
    const AnyFrame frame = frame_flag( a );
    if ( !a.condition.empty() )
    {
        if ( a.condition == "KP" )
        {
            if ( const auto* f = std::get_if< MipcFrame >( &frame ) )
                return report_condition( check_kp( *f ), a );
            return report_condition( check_kp( skeleton( std::get< Ms4Frame >( frame ) ).frame ), a );
        }
        const auto* g = std::get_if< Ms4Frame >( &frame );
        if ( g == nullptr )
            throw Error( "cli", a.condition + " applies to ms4 frames" );
        if ( a.condition == "GKP" )
            return report_condition( check_gkp( *g ), a );
        if ( a.condition == "LKP" )
            return report_condition( check_lkp( *g ), a );
        throw Error( "cli", "--condition must be KP, GKP or LKP" );
    }

    const ValidityOptions options{ thread_count(), a.allow_large };
    const bool ms4 = std::holds_alternative< Ms4Frame >( frame );
    Formula f = formula_flag( a, ms4 ? Lang::Cl : Lang::Int );
    if ( ms4 && f.lang() == Lang::Int )
        f = godel_translate( f );
    const CheckReport report =
        std::visit( [ & ]( const auto& g ) { return is_valid( g, f, options ); }, frame );
    if ( a.json )
        print_json( report_to_json( report ) );
    else if ( report.valid )
        std::cout << "valid (" << report.valuations_tried << " valuations)\n";
    else
    {
        std::cout << "not valid: counterexample";
        for ( const auto& [ letter, points ] : report.counterexample->valuation )
            std::cout << ' ' << letter << '=' << set_text( points );
        std::cout << " at " << report.counterexample->point << " (" << report.valuations_tried
                  << " valuations)\n";
    }
    return report.valid ? 0 : exit_false;
}

void print_profile( const Profile& p, bool json )
{
    if ( json )
    {
        print_json( profile_to_json( p ) );
        return;
    }
    std::cout << p.frame_id();
    for ( const auto& [ name, value ] : p.fields() )
        std::cout << ' ' << name << '=' << ( value ? "true" : "false" );
    std::cout << '\n';
}

int cmd_classify( const Args& a )
{
    const unsigned threads = thread_count();
    if ( !a.frame.empty() )
    {
        const AnyFrame frame = frame_flag( a );
        const FrameKind kind = std::holds_alternative< Ms4Frame >( frame ) ? FrameKind::Ms4 : FrameKind::Mipc;
        ClassifyOptions options;
        options.threads = threads;
        std::optional< Predicate > predicate;
        if ( !a.predicate.empty() )
            predicate = Predicate::parse( a.predicate, kind );
        const Profile p = std::visit( [ & ]( const auto& g ) { return classify( g, options ); }, frame );
        print_profile( p, a.json );
        return predicate && !( *predicate )( p ) ? exit_false : 0;
    }
    if ( a.max_n == 0 )
        throw Error( "cli", "classify needs --frame or --max-n" );

    const FrameKind kind = kind_flag( a );
    std::optional< Predicate > predicate;
    if ( !a.predicate.empty() )
        predicate = Predicate::parse( a.predicate, kind );
    EnumerateOptions enumerate;
    enumerate.mod_iso = a.mod_iso;
    if ( a.cap != 0 )
        enumerate.cap = a.cap;
    bool any = false;
    for ( std::size_t n = 1; n <= a.max_n; ++n )
    {
        std::vector< AnyFrame > frames;
        if ( kind == FrameKind::Ms4 )
            for_each_ms4( n, [ & ]( const Ms4Frame& g ) { frames.emplace_back( g ); }, enumerate );
        else
            for_each_mipc( n, [ & ]( const MipcFrame& f ) { frames.emplace_back( f ); }, enumerate );
        std::vector< Profile > profiles( frames.size() );
        parallel_for( frames.size(), threads, [ & ]( std::size_t i ) {
            profiles[ i ] = std::visit( []( const auto& g ) { return classify( g ); }, frames[ i ] );
        } );
        for ( const auto& p : profiles )
        {
            if ( predicate && !( *predicate )( p ) )
                continue;
            any = true;
            print_profile( p, a.json );
        }
    }
    return predicate && !any ? exit_false : 0;
}

int cmd_skeleton( const Args& a )
{
    const AnyFrame frame = frame_flag( a );
    const auto* g = std::get_if< Ms4Frame >( &frame );
    if ( g == nullptr )
        throw Error( "cli", "skeleton takes an ms4 frame" );
    const Skeleton s = skeleton( *g );
    print_json( frame_to_json( s.frame, g->names(), s.quotient ) );
    return 0;
}

int cmd_extend( const Args& a )
{
    const AnyFrame frame = frame_flag( a );
    const auto* f = std::get_if< MipcFrame >( &frame );
    if ( f == nullptr )
        throw Error( "cli", "extend-lkur takes an mipc frame" );
    const LkurExtension ext = lkur_extend( *f );
    // The map sends each point of the extension to the point it stands for.
    Json j = frame_to_json( ext.frame );
    Json map = Json::object();
    for ( std::size_t y = 0; y < ext.projection.size(); ++y )
        map[ ext.frame.names().name( y ) ] = f->names().name( ext.projection[ y ] );
    j[ "map" ] = map;
    print_json( j );
    return 0;
}

int cmd_convert( const Args& a )
{
    const AnyFrame frame = frame_flag( a );
    if ( const auto* g = std::get_if< Ms4Frame >( &frame ) )
        print_json( frame_to_json( ms4_to_mipc( *g ) ) );
    else
        print_json( frame_to_json( mipc_to_ms4( std::get< MipcFrame >( frame ) ) ) );
    return 0;
}

int cmd_morphism( const Args& a )
{
    const AnyFrame src = frame_flag( a );
    const AnyFrame tgt = frame_flag( a.target.empty() ? std::string( "@K" ) : a.target );
    const auto* g = std::get_if< Ms4Frame >( &src );
    const auto* h = std::get_if< Ms4Frame >( &tgt );
    if ( g == nullptr || h == nullptr )
        throw Error( "cli", "morphism search takes ms4 frames" );
    MorphismSearchOptions options;
    options.threads = thread_count();
    options.limit = a.limit;
    if ( a.cap != 0 )
        options.cap = a.cap;
    const auto found = find_onto_morphisms( *g, *h, !a.whole, options );
    for ( const auto& m : found )
    {
        const Json j = morphism_to_json( m, g->names(), h->names() );
        if ( a.json )
            print_json( j );
        else
        {
            std::cout << set_text( g->names().names_of( m.domain ) ) << ':';
            for ( const auto& [ x, y ] : j[ "map" ].items() )
                std::cout << ' ' << x << "->" << y.get< std::string >();
            std::cout << '\n';
        }
    }
    if ( !a.json && found.empty() )
        std::cout << "no onto morphism\n";
    return found.empty() ? exit_false : 0;
}

int cmd_search( const Args& a )
{
    if ( a.predicate.empty() )
        throw Error( "cli", "--predicate is required" );
    const Predicate predicate = Predicate::parse( a.predicate, kind_flag( a ) );
    MinimalSearchOptions options;
    options.threads = thread_count();
    options.enumerate.mod_iso = a.mod_iso;
    if ( a.cap != 0 )
        options.enumerate.cap = a.cap;
    const MinimalResult result = find_minimal( predicate, a.max_n == 0 ? 4 : a.max_n, options );
    if ( a.json )
    {
        Json j = { { "found", result.frame.has_value() }, { "frames_scanned", result.frames_scanned } };
        if ( result.frame )
        {
            j[ "id" ] = id_of( *result.frame );
            j[ "frame" ] = frame_to_json( *result.frame );
        }
        print_json( j );
    }
    else if ( result.frame )
        std::cout << id_of( *result.frame ) << ' ' << frame_to_json( *result.frame ).dump() << '\n';
    else
        std::cout << "no frame up to " << result.frames_scanned.size() << " points\n";
    return result.frame ? 0 : exit_false;
}

int cmd_reproduce( const Args& a )
{
    ReproduceOptions options;
    options.threads = thread_count();
    bool all = true;
    for ( int k = 1; k <= criterion_count; ++k )
    {
        if ( a.criterion != 0 && k != a.criterion )
            continue;
        const CriterionResult r = run_criterion( k, options );
        all = all && r.passed;
        if ( a.json )
            print_json( { { "criterion", r.number },
                          { "title", r.title },
                          { "passed", r.passed },
                          { "detail", r.detail },
                          { "seconds", r.seconds } } );
        else
            std::printf( "%2d  %-4s  %-50s %7.2fs  %s\n", r.number, r.passed ? "PASS" : "FAIL", r.title.c_str(),
                         r.seconds, r.detail.c_str() );
        std::fflush( stdout );
    }
    return all ? 0 : exit_false;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Finite-frame workbench for monadic intuitionistic and modal logics" };
    app.require_subcommand( 1 );
    Args a;

    auto formula_opts = [ & ]( CLI::App* sub ) {
        sub->add_option( "--formula", a.formula, "Registry name or formula text" );
        sub->add_option( "--lang", a.lang, "Language of formula text: int or cl" );
    };
    auto frame_opts = [ & ]( CLI::App* sub ) {
        sub->add_option( "--frame", a.frame, "Frame file, or @H, @K, @rhoK" );
        sub->add_flag( "--close", a.close, "Close R (and Q) reflexively and transitively before validating" );
    };

    auto* parse = app.add_subcommand( "parse", "Parse and print a formula" );
    formula_opts( parse );
    parse->add_flag( "--json", a.json );

    auto* translate = app.add_subcommand( "translate", "Translate an int formula into the cl language" );
    formula_opts( translate );
    translate->add_flag( "--literal-bottom", a.literal_bottom, "Write implications as boxed disjunctions" );
    translate->add_flag( "--json", a.json );

    auto* check = app.add_subcommand( "check", "Check validity of a formula, or a frame condition" );
    frame_opts( check );
    formula_opts( check );
    check->add_option( "--condition", a.condition, "KP, GKP or LKP instead of a formula" );
    check->add_flag( "--allow-large", a.allow_large, "Lift the valuation space guard" );
    check->add_flag( "--json", a.json );

    auto* classify_cmd = app.add_subcommand( "classify", "Profile one frame, or every frame up to --max-n points" );
    frame_opts( classify_cmd );
    classify_cmd->add_option( "--max-n", a.max_n );
    classify_cmd->add_option( "--kind", a.kind, "ms4 or mipc when enumerating" );
    classify_cmd->add_option( "--predicate", a.predicate, "Keep profiles satisfying this; exit 1 if none" );
    classify_cmd->add_option( "--cap", a.cap, "Largest frame size to enumerate" );
    classify_cmd->add_flag( "--mod-iso", a.mod_iso );
    classify_cmd->add_flag( "--json", a.json );

    auto* skeleton_cmd = app.add_subcommand( "skeleton", "Quotient an ms4 frame by its clusters" );
    frame_opts( skeleton_cmd );

    auto* extend = app.add_subcommand( "extend-lkur", "Extend an mipc frame to an LKP ms4 frame with that skeleton" );
    frame_opts( extend );

    auto* convert = app.add_subcommand( "convert", "Convert between mipc frames and posetal ms4 frames" );
    frame_opts( convert );

    auto* morphism = app.add_subcommand( "morphism", "List onto morphisms from Q-upsets of --frame onto --target" );
    frame_opts( morphism );
    morphism->add_option( "--target", a.target, "Target frame (default @K)" );
    morphism->add_flag( "--whole", a.whole, "Map the whole frame instead of each Q-upset" );
    morphism->add_option( "--cap", a.cap, "Largest number of candidate maps per domain" );
    morphism->add_option( "--limit", a.limit, "Stop after this many morphisms" );
    morphism->add_flag( "--json", a.json );

    auto* search = app.add_subcommand( "search", "Find a smallest frame whose profile satisfies a predicate" );
    search->add_option( "--predicate", a.predicate );
    search->add_option( "--max-n", a.max_n, "Largest frame size to scan (default 4)" );
    search->add_option( "--kind", a.kind, "ms4 or mipc" );
    search->add_option( "--cap", a.cap, "Largest frame size to enumerate" );
    search->add_flag( "--mod-iso", a.mod_iso );
    search->add_flag( "--json", a.json );

    auto* reproduce = app.add_subcommand( "reproduce-paper", "Run the acceptance checks and print a table" );
    reproduce->add_option( "--criterion", a.criterion, "Run only this check" );
    reproduce->add_flag( "--json", a.json );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        const int code = app.exit( e );
        return code == 0 ? 0 : exit_usage;
    }

    try
    {
        if ( *parse )
            return cmd_parse( a );
        if ( *translate )
            return cmd_translate( a );
        if ( *check )
            return cmd_check( a );
        if ( *classify_cmd )
            return cmd_classify( a );
        if ( *skeleton_cmd )
            return cmd_skeleton( a );
        if ( *extend )
            return cmd_extend( a );
        if ( *convert )
            return cmd_convert( a );
        if ( *morphism )
            return cmd_morphism( a );
        if ( *search )
            return cmd_search( a );
        if ( *reproduce )
            return cmd_reproduce( a );
    }
    catch ( const Error& e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
