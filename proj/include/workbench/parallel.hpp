#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace workbench {

/// Hardware concurrency, at least 1.
[[nodiscard]] inline unsigned available_threads() noexcept
{
    return std::max( 1U, std::thread::hardware_concurrency() );
}

/// Smallest i in [0, count) with `failed(i)`, or nothing. Workers claim
/// chunks in increasing order and skip chunks past the best index found so
/// far, so the answer does not depend on scheduling.
template < typename Pred >
[[nodiscard]] std::optional< std::uint64_t > find_first( std::uint64_t count, unsigned threads, Pred&& failed,
                                                         std::uint64_t chunk = 512 )
{
    constexpr auto none = std::numeric_limits< std::uint64_t >::max();
    if ( threads <= 1 || count <= chunk )
    {
        for ( std::uint64_t i = 0; i < count; ++i )
            if ( failed( i ) )
                return i;
        return std::nullopt;
    }

    std::atomic< std::uint64_t > next{ 0 };
    std::atomic< std::uint64_t > best{ none };
    auto worker = [ & ] {
        for ( ;; )
        {
            const std::uint64_t start = next.fetch_add( chunk );
            if ( start >= count || start >= best.load() )
                return;
            const std::uint64_t stop = std::min( count, start + chunk );
            for ( std::uint64_t i = start; i < stop; ++i )
            {
                if ( !failed( i ) )
                    continue;
                std::uint64_t current = best.load();
                while ( i < current && !best.compare_exchange_weak( current, i ) )
                {
                }
                break;
            }
        }
    };
    {
        std::vector< std::jthread > pool;
        const auto n = static_cast< unsigned >( std::min< std::uint64_t >( threads, ( count + chunk - 1 ) / chunk ) );
        for ( unsigned t = 0; t < n; ++t )
            pool.emplace_back( worker );
    }
    if ( best.load() == none )
        return std::nullopt;
    return best.load();
}

/// Runs `fn(i)` for every i in [0, count) on up to `threads` workers.
template < typename Fn >
void parallel_for( std::size_t count, unsigned threads, Fn&& fn )
{
    if ( threads <= 1 || count <= 1 )
    {
        for ( std::size_t i = 0; i < count; ++i )
            fn( i );
        return;
    }
    std::atomic< std::size_t > next{ 0 };
    std::vector< std::jthread > pool;
    const auto n = static_cast< unsigned >( std::min< std::size_t >( threads, count ) );
    for ( unsigned t = 0; t < n; ++t )
        pool.emplace_back( [ & ] {
            for ( std::size_t i = next.fetch_add( 1 ); i < count; i = next.fetch_add( 1 ) )
                fn( i );
        } );
}

} // namespace workbench
