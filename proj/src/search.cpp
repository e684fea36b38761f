#include "workbench/search.hpp"

#include "workbench/error.hpp"
#include "workbench/formula.hpp"
#include "workbench/morphisms.hpp"
#include "workbench/parallel.hpp"
#include "workbench/semantics.hpp"
#include "workbench/translate.hpp"

#include <algorithm>
#include <cctype>

namespace workbench {

std::vector< Relation > quasi_orders( std::size_t n )
{
    std::vector< std::pair< std::size_t, std::size_t > > pairs;
    for ( std::size_t i = 0; i < n; ++i )
        for ( std::size_t j = 0; j < n; ++j )
            if ( i != j )
                pairs.emplace_back( i, j );
    if ( pairs.size() >= 63 )
        throw Error( "search", "too many points to enumerate quasi-orders" );

    std::vector< Relation > out;
    const std::uint64_t limit = std::uint64_t{ 1 } << pairs.size();
    for ( std::uint64_t bits = 0; bits < limit; ++bits )
    {
        Relation r = Relation::identity( n );
        for ( std::size_t k = 0; k < pairs.size(); ++k )
            if ( ( bits >> k ) & 1U )
                r.set( pairs[ k ].first, pairs[ k ].second );
        if ( r.is_transitive() )
            out.push_back( std::move( r ) );
    }
    return out;
}

std::vector< std::vector< PointSet > > partitions( std::size_t n )
{
    std::vector< std::vector< PointSet > > out;
    std::vector< std::size_t > rgs( n, 0 );
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i)).
    auto emit = [ & ] {
        std::vector< PointSet > blocks;
        for ( std::size_t i = 0; i < n; ++i )
        {
            if ( rgs[ i ] == blocks.size() )
                blocks.push_back( 0 );
            blocks[ rgs[ i ] ] |= singleton( i );
        }
        out.push_back( std::move( blocks ) );
    };
    std::function< void( std::size_t, std::size_t ) > fill = [ & ]( std::size_t i, std::size_t used ) {
        if ( i == n )
        {
            emit();
            return;
        }
        for ( std::size_t b = 0; b <= used; ++b )
        {
            rgs[ i ] = b;
            fill( i + 1, std::max( used, b + 1 ) );
        }
    };
    if ( n == 0 )
        return out;
    fill( 1, 1 );
    return out;
}

std::vector< std::string > point_names( std::size_t n )
{
    std::vector< std::string > out;
    for ( std::size_t i = 0; i < n; ++i )
        out.push_back( i < 26 ? std::string( 1, static_cast< char >( 'a' + i ) ) : "p" + std::to_string( i ) );
    return out;
}

namespace {

void require_enumerable( std::size_t n, const EnumerateOptions& options )
{
    if ( n == 0 )
        throw Error( "search", "frames need at least one point" );
    if ( n > options.cap )
        throw Error( "search", "enumeration of " + std::to_string( n ) + "-point frames exceeds the cap of " +
                                   std::to_string( options.cap ) );
}

// E[R[x]] contains R[E[x]] for every x.
bool commutes( const Relation& r, const Relation& e )
{
    for ( std::size_t x = 0; x < r.size(); ++x )
        if ( !is_subset( r.image_of( e.image( x ) ), e.image_of( r.image( x ) ) ) )
            return false;
    return true;
}

template < typename Frame >
class IsoFilter
{
public:
    explicit IsoFilter( bool active ) : _active{ active } {}

    bool fresh( const Frame& f )
    {
        if ( !_active )
            return true;
        for ( const auto& seen : _seen )
            if ( iso( seen, f ) )
                return false;
        _seen.push_back( f );
        return true;
    }

private:
    bool _active;
    std::vector< Frame > _seen;
};

} // namespace

void for_each_ms4( std::size_t n, const std::function< void( const Ms4Frame& ) >& fn, EnumerateOptions options )
{
    require_enumerable( n, options );
    const auto names = point_names( n );
    const auto parts = partitions( n );
    std::vector< Relation > equivalences;
    for ( const auto& p : parts )
        equivalences.push_back( Relation::from_blocks( n, p ) );

    IsoFilter< Ms4Frame > filter( options.mod_iso );
    std::size_t index = 0;
    for ( const Relation& r : quasi_orders( n ) )
        for ( std::size_t k = 0; k < parts.size(); ++k )
        {
            if ( !commutes( r, equivalences[ k ] ) )
                continue;
            Ms4Frame g( names, r, parts[ k ] );
            g.set_id( "ms4-n" + std::to_string( n ) + "-" + std::to_string( index++ ) );
            if ( filter.fresh( g ) )
                fn( g );
        }
}

std::vector< Ms4Frame > enumerate_ms4( std::size_t n, EnumerateOptions options )
{
    std::vector< Ms4Frame > out;
    for_each_ms4( n, [ & ]( const Ms4Frame& g ) { out.push_back( g ); }, options );
    return out;
}

void for_each_mipc( std::size_t n, const std::function< void( const MipcFrame& ) >& fn, EnumerateOptions options )
{
    require_enumerable( n, options );
    const auto names = point_names( n );
    const auto orders = quasi_orders( n );

    IsoFilter< MipcFrame > filter( options.mod_iso );
    std::size_t index = 0;
    for ( const Relation& r : orders )
    {
        if ( !r.is_antisymmetric() )
            continue;
        for ( const Relation& q : orders )
        {
            if ( !r.is_subset_of( q ) )
                continue;
            const Relation e_q = q.symmetric_core();
            bool confluent = true;
            for ( std::size_t x = 0; x < n && confluent; ++x )
                confluent = is_subset( q.image( x ), e_q.image_of( r.image( x ) ) );
            if ( !confluent )
                continue;
            MipcFrame f( names, r, q );
            f.set_id( "mipc-n" + std::to_string( n ) + "-" + std::to_string( index++ ) );
            if ( filter.fresh( f ) )
                fn( f );
        }
    }
}

std::vector< MipcFrame > enumerate_mipc( std::size_t n, EnumerateOptions options )
{
    std::vector< MipcFrame > out;
    for_each_mipc( n, [ & ]( const MipcFrame& f ) { out.push_back( f ); }, options );
    return out;
}

void Profile::set( std::string name, bool value )
{
    for ( auto& [ key, v ] : _fields )
        if ( key == name )
        {
            v = value;
            return;
        }
    _fields.emplace_back( std::move( name ), value );
}

bool Profile::has( std::string_view name ) const noexcept
{
    return std::any_of( _fields.begin(), _fields.end(), [ & ]( const auto& f ) { return f.first == name; } );
}

bool Profile::at( std::string_view name ) const
{
    for ( const auto& [ key, v ] : _fields )
        if ( key == name )
            return v;
    throw Error( "search", "profile of " + _frame_id + " has no field '" + std::string( name ) + "'" );
}

const std::vector< std::string >& profile_fields( FrameKind kind )
{
    static const std::vector< std::string > ms4 = [] {
        std::vector< std::string > f = { "ms4_valid", "mipc_valid", "antisymmetric", "KP", "GKP", "LKP", "splitting" };
        for ( const auto& nf : axiom_registry() )
            f.push_back( nf.name );
        return f;
    }();
    static const std::vector< std::string > mipc = { "ms4_valid", "mipc_valid", "KP", "kur" };
    return kind == FrameKind::Ms4 ? ms4 : mipc;
}

namespace {

bool wanted( const ClassifyOptions& options, std::string_view field )
{
    return options.only.empty() || options.only.contains( field );
}

} // namespace

Profile classify( const Ms4Frame& g, const ClassifyOptions& options )
{
    Profile p( g.id(), FrameKind::Ms4 );
    const ValidityOptions validity{ options.threads, false };
    for ( const auto& field : profile_fields( FrameKind::Ms4 ) )
    {
        if ( !wanted( options, field ) )
            continue;
        bool value = false;
        if ( field == "ms4_valid" )
            value = true;
        else if ( field == "mipc_valid" )
        {
            try
            {
                (void)ms4_to_mipc( g );
                value = true;
            }
            catch ( const Error& )
            {
                value = false;
            }
        }
        else if ( field == "antisymmetric" )
            value = is_antisymmetric( g );
        else if ( field == "KP" )
            value = check_kp( skeleton( g ).frame ).valid;
        else if ( field == "GKP" )
            value = check_gkp( g ).valid;
        else if ( field == "LKP" )
            value = check_lkp( g ).valid;
        else if ( field == "splitting" )
            value = splitting_lkur_test( g );
        else
        {
            Formula f = named_formula( field );
            if ( f.lang() == Lang::Int )
                f = godel_translate( f );
            value = is_valid( g, f, validity ).valid;
        }
        p.set( field, value );
    }
    return p;
}

Profile classify( const MipcFrame& f, const ClassifyOptions& options )
{
    Profile p( f.id(), FrameKind::Mipc );
    if ( wanted( options, "ms4_valid" ) )
    {
        bool value = true;
        try
        {
            (void)mipc_to_ms4( f );
        }
        catch ( const Error& )
        {
            value = false;
        }
        p.set( "ms4_valid", value );
    }
    if ( wanted( options, "mipc_valid" ) )
        p.set( "mipc_valid", true );
    if ( wanted( options, "KP" ) )
        p.set( "KP", check_kp( f ).valid );
    if ( wanted( options, "kur" ) )
        p.set( "kur", is_valid( f, named_formula( "kur" ), { options.threads, false } ).valid );
    return p;
}

struct Predicate::Node
{
    enum class Op
    {
        Const,
        Field,
        Not,
        And,
        Or,
    };
    Op op;
    bool value = false;
    std::string field;
    std::shared_ptr< const Node > lhs;
    std::shared_ptr< const Node > rhs;
};

namespace {

using PredNode = std::shared_ptr< const Predicate::Node >;

class PredicateParser
{
public:
    PredicateParser( std::string_view text, const std::vector< std::string >& known,
                     std::set< std::string, std::less<> >& fields )
        : _text{ text }, _known{ known }, _fields{ fields }
    {
    }

    PredNode parse()
    {
        auto node = disjunction();
        skip_space();
        if ( _pos != _text.size() )
            throw ParseError( "search", "unexpected '" + std::string( 1, _text[ _pos ] ) + "'", _pos );
        return node;
    }

private:
    void skip_space()
    {
        while ( _pos < _text.size() && std::isspace( static_cast< unsigned char >( _text[ _pos ] ) ) )
            ++_pos;
    }

    bool accept( char c )
    {
        skip_space();
        if ( _pos < _text.size() && _text[ _pos ] == c )
        {
            ++_pos;
            return true;
        }
        return false;
    }

    static PredNode make( Predicate::Node node ) { return std::make_shared< const Predicate::Node >( std::move( node ) ); }

    PredNode disjunction()
    {
        auto node = conjunction();
        while ( accept( '|' ) )
            node = make( { Predicate::Node::Op::Or, false, {}, node, conjunction() } );
        return node;
    }

    PredNode conjunction()
    {
        auto node = negation();
        while ( accept( '&' ) )
            node = make( { Predicate::Node::Op::And, false, {}, node, negation() } );
        return node;
    }

    PredNode negation()
    {
        if ( accept( '!' ) )
            return make( { Predicate::Node::Op::Not, false, {}, negation(), nullptr } );
        return atom();
    }

    PredNode atom()
    {
        if ( accept( '(' ) )
        {
            auto node = disjunction();
            if ( !accept( ')' ) )
                throw ParseError( "search", "expected ')'", _pos );
            return node;
        }
        skip_space();
        const std::size_t start = _pos;
        while ( _pos < _text.size() &&
                ( std::isalnum( static_cast< unsigned char >( _text[ _pos ] ) ) || _text[ _pos ] == '_' ) )
            ++_pos;
        if ( start == _pos )
            throw ParseError( "search", _pos < _text.size() ? "unexpected '" + std::string( 1, _text[ _pos ] ) + "'"
                                                            : std::string( "unexpected end of predicate" ),
                              _pos );
        const std::string word( _text.substr( start, _pos - start ) );
        if ( word == "true" || word == "false" )
            return make( { Predicate::Node::Op::Const, word == "true", {}, nullptr, nullptr } );
        if ( std::find( _known.begin(), _known.end(), word ) == _known.end() )
            throw Error( "search", "unknown profile field '" + word + "'" );
        _fields.insert( word );
        return make( { Predicate::Node::Op::Field, false, word, nullptr, nullptr } );
    }

    std::string_view _text;
    const std::vector< std::string >& _known;
    std::set< std::string, std::less<> >& _fields;
    std::size_t _pos = 0;
};

bool evaluate( const Predicate::Node& node, const Profile& p )
{
    using Op = Predicate::Node::Op;
    switch ( node.op )
    {
    case Op::Const: return node.value;
    case Op::Field: return p.at( node.field );
    case Op::Not: return !evaluate( *node.lhs, p );
    case Op::And: return evaluate( *node.lhs, p ) && evaluate( *node.rhs, p );
    case Op::Or: return evaluate( *node.lhs, p ) || evaluate( *node.rhs, p );
    }
    return false;
}

} // namespace

Predicate Predicate::parse( std::string_view text, FrameKind kind )
{
    Predicate p;
    p._kind = kind;
    p._text = std::string( text );
    p._root = PredicateParser( text, profile_fields( kind ), p._fields ).parse();
    return p;
}

bool Predicate::operator()( const Profile& p ) const
{
    return evaluate( *_root, p );
}

namespace {

template < typename Frame >
std::optional< std::size_t > first_match( const std::vector< Frame >& frames, const Predicate& predicate,
                                          unsigned threads )
{
    ClassifyOptions classify_options;
    classify_options.only = predicate.fields();
    if ( classify_options.only.empty() )
        classify_options.only.insert( "ms4_valid" );
    const auto hit = find_first( frames.size(), threads,
                                 [ & ]( std::uint64_t i ) { return predicate( classify( frames[ i ], classify_options ) ); },
                                 16 );
    if ( !hit )
        return std::nullopt;
    return static_cast< std::size_t >( *hit );
}

} // namespace

MinimalResult find_minimal( const Predicate& predicate, std::size_t max_n, MinimalSearchOptions options )
{
    MinimalResult result;
    for ( std::size_t n = 1; n <= max_n; ++n )
    {
        if ( predicate.kind() == FrameKind::Ms4 )
        {
            const auto frames = enumerate_ms4( n, options.enumerate );
            const auto hit = first_match( frames, predicate, options.threads );
            result.frames_scanned.push_back( hit ? *hit + 1 : frames.size() );
            if ( hit )
            {
                result.frame = frames[ *hit ];
                return result;
            }
        }
        else
        {
            const auto frames = enumerate_mipc( n, options.enumerate );
            const auto hit = first_match( frames, predicate, options.threads );
            result.frames_scanned.push_back( hit ? *hit + 1 : frames.size() );
            if ( hit )
            {
                result.frame = frames[ *hit ];
                return result;
            }
        }
    }
    return result;
}

} // namespace workbench
