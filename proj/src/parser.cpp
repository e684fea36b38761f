#include "workbench/error.hpp"
#include "workbench/formula.hpp"

#include <cctype>
#include <optional>

namespace workbench {

namespace {

enum class Tok
{
    End,
    Arrow,
    And,
    Or,
    Not,
    Box,
    Diamond,
    MasterBox,
    MasterDiamond,
    Forall,
    Exists,
    LParen,
    RParen,
    False,
    True,
    Ident,
};

struct Token
{
    Tok kind;
    std::size_t offset;
    std::string_view text;
};

class Lexer
{
public:
    explicit Lexer( std::string_view text ) : _text{ text } {}

    Token next()
    {
        while ( _pos < _text.size() && std::isspace( static_cast< unsigned char >( _text[ _pos ] ) ) )
            ++_pos;
        const std::size_t start = _pos;
        if ( _pos >= _text.size() )
            return { Tok::End, start, {} };

        constexpr std::pair< std::string_view, Tok > symbols[] = {
            { "->", Tok::Arrow }, { "[*]", Tok::MasterBox }, { "<*>", Tok::MasterDiamond },
            { "[]", Tok::Box },   { "<>", Tok::Diamond },    { "&", Tok::And },
            { "|", Tok::Or },     { "~", Tok::Not },         { "(", Tok::LParen },
            { ")", Tok::RParen }, { "A", Tok::Forall },      { "E", Tok::Exists },
        };
        for ( const auto& [ sym, kind ] : symbols )
        {
            if ( _text.substr( _pos, sym.size() ) == sym )
            {
                _pos += sym.size();
                return { kind, start, sym };
            }
        }

        if ( std::islower( static_cast< unsigned char >( _text[ _pos ] ) ) )
        {
            while ( _pos < _text.size() &&
                    ( std::isalnum( static_cast< unsigned char >( _text[ _pos ] ) ) || _text[ _pos ] == '_' ) )
                ++_pos;
            const auto word = _text.substr( start, _pos - start );
            if ( word == "false" )
                return { Tok::False, start, word };
            if ( word == "true" )
                return { Tok::True, start, word };
            return { Tok::Ident, start, word };
        }
        throw ParseError( "syntax", "unexpected character '" + std::string( 1, _text[ _pos ] ) + "'", start );
    }

private:
    std::string_view _text;
    std::size_t _pos = 0;
};

class Parser
{
public:
    Parser( std::string_view text, Lang lang ) : _lexer{ text }, _lang{ lang } { advance(); }

    Formula parse()
    {
        auto f = implication();
        if ( _tok.kind != Tok::End )
            throw ParseError( "syntax", "unexpected '" + std::string( _tok.text ) + "'", _tok.offset );
        return f;
    }

private:
    void advance() { _tok = _lexer.next(); }

    Formula implication()
    {
        auto lhs = disjunction();
        if ( _tok.kind == Tok::Arrow )
        {
            advance();
            return Formula::implication( std::move( lhs ), implication() );
        }
        return lhs;
    }

    Formula disjunction()
    {
        auto f = conjunction();
        while ( _tok.kind == Tok::Or )
        {
            advance();
            f = Formula::disjunction( std::move( f ), conjunction() );
        }
        return f;
    }

    Formula conjunction()
    {
        auto f = unary();
        while ( _tok.kind == Tok::And )
        {
            advance();
            f = Formula::conjunction( std::move( f ), unary() );
        }
        return f;
    }

    void require_classical( const Token& t ) const
    {
        if ( _lang != Lang::Cl )
            throw ParseError( "syntax", "'" + std::string( t.text ) + "' is not part of the int language", t.offset );
    }

    Formula unary()
    {
        const Token t = _tok;
        switch ( t.kind )
        {
        case Tok::Not: advance(); return Formula::negation( unary() );
        case Tok::Forall: advance(); return Formula::forall( unary() );
        case Tok::Exists: advance(); return Formula::exists( unary() );
        case Tok::Box: require_classical( t ); advance(); return Formula::box( unary() );
        case Tok::Diamond: require_classical( t ); advance(); return Formula::diamond( unary() );
        case Tok::MasterBox: require_classical( t ); advance(); return Formula::master_box( unary() );
        case Tok::MasterDiamond: require_classical( t ); advance(); return Formula::master_diamond( unary() );
        default: return atom();
        }
    }

    Formula atom()
    {
        const Token t = _tok;
        switch ( t.kind )
        {
        case Tok::False: advance(); return Formula::falsum( _lang );
        case Tok::True: advance(); return Formula::verum( _lang );
        case Tok::Ident: advance(); return Formula::letter( _lang, std::string( t.text ) );
        case Tok::LParen: {
            advance();
            auto f = implication();
            if ( _tok.kind != Tok::RParen )
                throw ParseError( "syntax", "expected ')'", _tok.offset );
            advance();
            return f;
        }
        case Tok::End: throw ParseError( "syntax", "unexpected end of input", t.offset );
        default: throw ParseError( "syntax", "unexpected '" + std::string( t.text ) + "'", t.offset );
        }
    }

    Lexer _lexer;
    Lang _lang;
    Token _tok{};
};

// Binding strength: implication < disjunction < conjunction < unary.
int precedence( Kind kind )
{
    switch ( kind )
    {
    case Kind::Implies: return 0;
    case Kind::Or: return 1;
    case Kind::And: return 2;
    default: return 3;
    }
}

std::string_view prefix( Kind kind )
{
    switch ( kind )
    {
    case Kind::Not: return "~";
    case Kind::Box: return "[]";
    case Kind::Diamond: return "<>";
    case Kind::IntForall:
    case Kind::ClForall: return "A ";
    case Kind::IntExists:
    case Kind::ClExists: return "E ";
    default: return "";
    }
}

void print_into( const Formula& f, int context, std::string& out )
{
    const int prec = precedence( f.kind() );
    const bool wrap = prec < context;
    if ( wrap )
        out += '(';
    switch ( f.kind() )
    {
    case Kind::Falsum: out += "false"; break;
    case Kind::Verum: out += "true"; break;
    case Kind::Letter: out += f.name(); break;
    case Kind::Implies:
        print_into( f.lhs(), 1, out );
        out += " -> ";
        print_into( f.rhs(), 0, out );
        break;
    case Kind::Or:
        print_into( f.lhs(), 1, out );
        out += " | ";
        print_into( f.rhs(), 2, out );
        break;
    case Kind::And:
        print_into( f.lhs(), 2, out );
        out += " & ";
        print_into( f.rhs(), 3, out );
        break;
    default:
        out += prefix( f.kind() );
        print_into( f.child( 0 ), 3, out );
        break;
    }
    if ( wrap )
        out += ')';
}

} // namespace

Formula parse_formula( std::string_view text, Lang lang )
{
    return Parser( text, lang ).parse();
}

std::string print_formula( const Formula& f )
{
    std::string out;
    print_into( f, 0, out );
    return out;
}

} // namespace workbench
