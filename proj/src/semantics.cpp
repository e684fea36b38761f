#include "workbench/semantics.hpp"

#include "workbench/error.hpp"
#include "workbench/parallel.hpp"

#include <algorithm>
#include <limits>
#include <span>

namespace workbench {

PointSet modal_image( const Ms4Frame& g, ModalOp op, PointSet a )
{
    switch ( op )
    {
    case ModalOp::Diamond: return g.r().preimage( a );
    case ModalOp::Box: return g.r().box( a );
    case ModalOp::Exists: return g.e().image_of( a );
    case ModalOp::Forall: return g.e().box( a );
    case ModalOp::MasterDiamond: return g.q().preimage( a );
    case ModalOp::MasterBox: return g.q().box( a );
    }
    return 0;
}

PointSet modal_image( const MipcFrame& f, ModalOp op, PointSet a )
{
    switch ( op )
    {
    case ModalOp::Diamond: return f.r().preimage( a );
    case ModalOp::Box: return f.r().box( a );
    default: break;
    }
    throw Error( "semantics", "only <> and [] apply to an mipc frame; use the int clauses for A and E" );
}

namespace {

/// A formula flattened into postfix order; each step writes one slot.
class Program
{
public:
    Program( const Formula& f, const std::vector< std::string >& letter_order )
    {
        emit( f, letter_order );
    }

    [[nodiscard]] std::size_t size() const noexcept { return _steps.size(); }

    /// MS4 clauses.
    PointSet run( const Ms4Frame& g, std::span< const PointSet > values, std::vector< PointSet >& slots ) const
    {
        const PointSet all = g.all();
        slots.resize( _steps.size() );
        for ( std::size_t i = 0; i < _steps.size(); ++i )
        {
            const Step& s = _steps[ i ];
            PointSet out = 0;
            switch ( s.kind )
            {
            case Kind::Falsum: out = 0; break;
            case Kind::Verum: out = all; break;
            case Kind::Letter: out = values[ s.letter ]; break;
            case Kind::Not: out = all & ~slots[ s.a ]; break;
            case Kind::And: out = slots[ s.a ] & slots[ s.b ]; break;
            case Kind::Or: out = slots[ s.a ] | slots[ s.b ]; break;
            case Kind::Implies: out = ( all & ~slots[ s.a ] ) | slots[ s.b ]; break;
            case Kind::Box: out = g.r().box( slots[ s.a ] ); break;
            case Kind::Diamond: out = g.r().preimage( slots[ s.a ] ); break;
            case Kind::ClForall: out = g.e().box( slots[ s.a ] ); break;
            case Kind::ClExists: out = g.e().image_of( slots[ s.a ] ); break;
            default: throw Error( "semantics", "int node in a cl formula" );
            }
            slots[ i ] = out;
        }
        return slots.back();
    }

    /// MIPC clauses: implication and negation through R, ∀ through Q,
    /// ∃ through E_Q.
    PointSet run( const MipcFrame& f, std::span< const PointSet > values, std::vector< PointSet >& slots ) const
    {
        const PointSet all = f.all();
        slots.resize( _steps.size() );
        for ( std::size_t i = 0; i < _steps.size(); ++i )
        {
            const Step& s = _steps[ i ];
            PointSet out = 0;
            switch ( s.kind )
            {
            case Kind::Falsum: out = 0; break;
            case Kind::Verum: out = all; break;
            case Kind::Letter: out = values[ s.letter ]; break;
            case Kind::Not: out = f.r().box( all & ~slots[ s.a ] ); break;
            case Kind::And: out = slots[ s.a ] & slots[ s.b ]; break;
            case Kind::Or: out = slots[ s.a ] | slots[ s.b ]; break;
            case Kind::Implies: out = f.r().box( ( all & ~slots[ s.a ] ) | slots[ s.b ] ); break;
            case Kind::IntForall: out = f.q().box( slots[ s.a ] ); break;
            case Kind::IntExists: out = f.e_q().image_of( slots[ s.a ] ); break;
            default: throw Error( "semantics", "cl node in an int formula" );
            }
            slots[ i ] = out;
        }
        return slots.back();
    }

private:
    struct Step
    {
        Kind kind;
        std::size_t letter = 0;
        std::size_t a = 0;
        std::size_t b = 0;
    };

    std::size_t emit( const Formula& f, const std::vector< std::string >& letter_order )
    {
        Step s{ f.kind() };
        if ( f.kind() == Kind::Letter )
        {
            auto it = std::find( letter_order.begin(), letter_order.end(), f.name() );
            if ( it == letter_order.end() )
                throw Error( "semantics", "valuation has no value for letter '" + f.name() + "'" );
            s.letter = static_cast< std::size_t >( it - letter_order.begin() );
        }
        if ( f.arity() >= 1 )
            s.a = emit( f.child( 0 ), letter_order );
        if ( f.arity() == 2 )
            s.b = emit( f.child( 1 ), letter_order );
        _steps.push_back( s );
        return _steps.size() - 1;
    }

    std::vector< Step > _steps;
};

void require_lang( const Formula& f, Lang lang, const char* frame_kind )
{
    if ( f.lang() != lang )
        throw Error( "semantics", std::string( "a " ) + std::string( to_string( f.lang() ) ) +
                                      " formula cannot be evaluated on an " + frame_kind + " frame" );
}

void require_in_frame( const Valuation& v, std::size_t n )
{
    for ( const auto& [ letter, set ] : v )
        if ( !is_subset( set, full_set( n ) ) )
            throw Error( "semantics", "letter '" + letter + "' is assigned points outside the frame" );
}

template < typename Frame >
PointSet evaluate( const Frame& frame, const Valuation& v, const Formula& f )
{
    require_in_frame( v, frame.size() );
    std::vector< std::string > order;
    std::vector< PointSet > values;
    for ( const auto& [ letter, set ] : v )
    {
        order.push_back( letter );
        values.push_back( set );
    }
    std::vector< PointSet > slots;
    return Program( f, order ).run( frame, values, slots );
}

} // namespace

PointSet truth_set( const Ms4Frame& g, const Valuation& v, const Formula& f )
{
    require_lang( f, Lang::Cl, "ms4" );
    return evaluate( g, v, f );
}

PointSet truth_set( const MipcFrame& frame, const Valuation& v, const Formula& f )
{
    require_lang( f, Lang::Int, "mipc" );
    for ( const auto& [ letter, set ] : v )
        if ( !frame.r().is_upset( set ) )
            throw Error( "semantics", "letter '" + letter + "' is not assigned an R-upset" );
    return evaluate( frame, v, f );
}

namespace {

PointSet letter_value( const Valuation& v, const std::string& name )
{
    auto it = v.find( name );
    if ( it == v.end() )
        throw Error( "semantics", "valuation has no value for letter '" + name + "'" );
    return it->second;
}

bool holds_ms4( const Ms4Frame& g, const Valuation& v, const Formula& f, std::size_t x )
{
    const std::size_t n = g.size();
    switch ( f.kind() )
    {
    case Kind::Falsum: return false;
    case Kind::Verum: return true;
    case Kind::Letter: return contains( letter_value( v, f.name() ), x );
    case Kind::Not: return !holds_ms4( g, v, f.child( 0 ), x );
    case Kind::And: return holds_ms4( g, v, f.lhs(), x ) && holds_ms4( g, v, f.rhs(), x );
    case Kind::Or: return holds_ms4( g, v, f.lhs(), x ) || holds_ms4( g, v, f.rhs(), x );
    case Kind::Implies: return !holds_ms4( g, v, f.lhs(), x ) || holds_ms4( g, v, f.rhs(), x );
    case Kind::Box:
        for ( std::size_t y = 0; y < n; ++y )
            if ( g.r().holds( x, y ) && !holds_ms4( g, v, f.child( 0 ), y ) )
                return false;
        return true;
    case Kind::Diamond:
        for ( std::size_t y = 0; y < n; ++y )
            if ( g.r().holds( x, y ) && holds_ms4( g, v, f.child( 0 ), y ) )
                return true;
        return false;
    case Kind::ClForall:
        for ( std::size_t y = 0; y < n; ++y )
            if ( g.e().holds( x, y ) && !holds_ms4( g, v, f.child( 0 ), y ) )
                return false;
        return true;
    case Kind::ClExists:
        for ( std::size_t y = 0; y < n; ++y )
            if ( g.e().holds( x, y ) && holds_ms4( g, v, f.child( 0 ), y ) )
                return true;
        return false;
    default: break;
    }
    throw Error( "semantics", "int node in a cl formula" );
}

bool holds_mipc( const MipcFrame& frame, const Valuation& v, const Formula& f, std::size_t x )
{
    const std::size_t n = frame.size();
    const Relation& r = frame.r();
    const Relation& q = frame.q();
    switch ( f.kind() )
    {
    case Kind::Falsum: return false;
    case Kind::Verum: return true;
    case Kind::Letter: return contains( letter_value( v, f.name() ), x );
    case Kind::And: return holds_mipc( frame, v, f.lhs(), x ) && holds_mipc( frame, v, f.rhs(), x );
    case Kind::Or: return holds_mipc( frame, v, f.lhs(), x ) || holds_mipc( frame, v, f.rhs(), x );
    case Kind::Not:
        for ( std::size_t y = 0; y < n; ++y )
            if ( r.holds( x, y ) && holds_mipc( frame, v, f.child( 0 ), y ) )
                return false;
        return true;
    case Kind::Implies:
        for ( std::size_t y = 0; y < n; ++y )
            if ( r.holds( x, y ) && holds_mipc( frame, v, f.lhs(), y ) && !holds_mipc( frame, v, f.rhs(), y ) )
                return false;
        return true;
    case Kind::IntForall:
        for ( std::size_t y = 0; y < n; ++y )
            if ( q.holds( x, y ) && !holds_mipc( frame, v, f.child( 0 ), y ) )
                return false;
        return true;
    case Kind::IntExists:
        for ( std::size_t y = 0; y < n; ++y )
            if ( q.holds( x, y ) && q.holds( y, x ) && holds_mipc( frame, v, f.child( 0 ), y ) )
                return true;
        return false;
    default: break;
    }
    throw Error( "semantics", "cl node in an int formula" );
}

} // namespace

bool satisfies( const Ms4Frame& g, const Valuation& v, const Formula& f, std::size_t x )
{
    require_lang( f, Lang::Cl, "ms4" );
    return holds_ms4( g, v, f, x );
}

bool satisfies( const MipcFrame& frame, const Valuation& v, const Formula& f, std::size_t x )
{
    require_lang( f, Lang::Int, "mipc" );
    return holds_mipc( frame, v, f, x );
}

std::vector< PointSet > upsets( const Relation& r )
{
    std::vector< PointSet > out;
    const PointSet limit = full_set( r.size() );
    for ( std::uint64_t s = 0; s <= limit; ++s )
        if ( r.is_upset( static_cast< PointSet >( s ) ) )
            out.push_back( static_cast< PointSet >( s ) );
    return out;
}

namespace {

constexpr std::size_t valuation_space_bits = 24;

void require_small_space( std::size_t letter_count, std::size_t points, bool allow_large )
{
    if ( !allow_large && letter_count * points > valuation_space_bits )
        throw Error( "semantics", std::to_string( letter_count ) + " letters on " + std::to_string( points ) +
                                      " points exceed 2^24 valuations; pass the override to force the check" );
}

/// `candidates` lists the admissible sets of one letter; empty means every
/// subset, in which case the digit itself is the set.
template < typename Frame >
CheckReport check_validity( const Frame& frame, const Formula& f, const std::vector< std::string >& order,
                            const std::vector< PointSet >& candidates, ValidityOptions options )
{
    const std::uint64_t radix = candidates.empty() ? std::uint64_t{ 1 } << frame.size() : candidates.size();
    std::uint64_t total = 1;
    for ( std::size_t i = 0; i < order.size(); ++i )
    {
        if ( total > std::numeric_limits< std::uint64_t >::max() / radix )
            throw Error( "semantics", "valuation space does not fit in 64 bits" );
        total *= radix;
    }

    const Program program( f, order );
    const PointSet all = frame.all();
    auto decode = [ & ]( std::uint64_t index, std::vector< PointSet >& values ) {
        values.resize( order.size() );
        for ( auto& value : values )
        {
            const std::uint64_t digit = index % radix;
            value = candidates.empty() ? static_cast< PointSet >( digit ) : candidates[ digit ];
            index /= radix;
        }
    };

    const auto first_failure = find_first( total, options.threads, [ & ]( std::uint64_t index ) {
        thread_local std::vector< PointSet > values;
        thread_local std::vector< PointSet > slots;
        decode( index, values );
        return program.run( frame, values, slots ) != all;
    } );

    CheckReport report;
    report.frame_id = frame.id();
    report.formula = print_formula( f );
    report.valuations_tried = first_failure ? *first_failure + 1 : total;
    if ( first_failure )
    {
        std::vector< PointSet > values;
        std::vector< PointSet > slots;
        decode( *first_failure, values );
        const PointSet truth = program.run( frame, values, slots );
        Counterexample cx;
        for ( std::size_t i = 0; i < order.size(); ++i )
            cx.valuation[ order[ i ] ] = frame.names().names_of( values[ i ] );
        cx.point = frame.names().name( static_cast< std::size_t >( std::countr_zero( all & ~truth ) ) );
        report.valid = false;
        report.counterexample = std::move( cx );
    }
    return report;
}

std::vector< std::string > sorted_letters( const Formula& f )
{
    const auto names = letters( f );
    return { names.begin(), names.end() };
}

} // namespace

CheckReport is_valid( const Ms4Frame& g, const Formula& f, ValidityOptions options )
{
    require_lang( f, Lang::Cl, "ms4" );
    const auto order = sorted_letters( f );
    require_small_space( order.size(), g.size(), options.allow_large );
    return check_validity( g, f, order, {}, options );
}

CheckReport is_valid( const MipcFrame& frame, const Formula& f, ValidityOptions options )
{
    require_lang( f, Lang::Int, "mipc" );
    const auto order = sorted_letters( f );
    require_small_space( order.size(), frame.size(), options.allow_large );
    return check_validity( frame, f, order, upsets( frame.r() ), options );
}

} // namespace workbench
