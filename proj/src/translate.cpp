#include "workbench/translate.hpp"

#include "workbench/error.hpp"

#include <algorithm>

namespace workbench {

namespace {

Formula translate( const Formula& f, const TranslateOptions& options )
{
    switch ( f.kind() )
    {
    case Kind::Falsum: return Formula::falsum( Lang::Cl );
    case Kind::Verum: return Formula::verum( Lang::Cl );
    case Kind::Letter: return Formula::box( Formula::letter( Lang::Cl, f.name() ) );
    case Kind::And: return Formula::conjunction( translate( f.lhs(), options ), translate( f.rhs(), options ) );
    case Kind::Or: return Formula::disjunction( translate( f.lhs(), options ), translate( f.rhs(), options ) );
    case Kind::Implies: {
        auto lhs = translate( f.lhs(), options );
        auto rhs = translate( f.rhs(), options );
        if ( options.literal_bottom )
            return Formula::box( Formula::disjunction( Formula::negation( std::move( lhs ) ), std::move( rhs ) ) );
        return Formula::box( Formula::implication( std::move( lhs ), std::move( rhs ) ) );
    }
    case Kind::Not: {
        auto inner = Formula::negation( translate( f.child( 0 ), options ) );
        if ( options.literal_bottom )
            return Formula::box( Formula::disjunction( std::move( inner ), Formula::falsum( Lang::Cl ) ) );
        return Formula::box( std::move( inner ) );
    }
    case Kind::IntForall: return Formula::master_box( translate( f.child( 0 ), options ) );
    case Kind::IntExists: return Formula::exists( translate( f.child( 0 ), options ) );
    default: break;
    }
    throw Error( "translate", "unexpected " + std::string( to_string( f.kind() ) ) + " node in an int formula" );
}

} // namespace

Formula godel_translate( const Formula& f, TranslateOptions options )
{
    if ( f.lang() != Lang::Int )
        throw Error( "translate", "the Gödel translation takes an int formula" );
    return translate( f, options );
}

Valuation translate_valuation( const std::map< std::string, std::vector< std::string > >& v, const Ms4Frame& g )
{
    Valuation out;
    for ( const auto& [ letter, points ] : v )
    {
        PointSet s = 0;
        for ( const auto& name : points )
        {
            const auto& all = g.points();
            const auto it = std::find( all.begin(), all.end(), name );
            if ( it == all.end() )
                throw Error( "translate", "'" + name + "' is not a point of the frame" );
            s |= singleton( static_cast< std::size_t >( it - all.begin() ) );
        }
        out[ letter ] = s;
    }
    return out;
}

} // namespace workbench
