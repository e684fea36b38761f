#pragma once

#include "workbench/formula.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace workbench {

/// A random formula of depth at most `max_depth` over the letters p, q, r, ...
/// (the first `letter_count`), drawing only connectives of `lang`.
[[nodiscard]] Formula random_formula( std::mt19937_64& rng, Lang lang, std::size_t max_depth, std::size_t letter_count );

struct CriterionResult
{
    int number = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct ReproduceOptions
{
    unsigned threads = 1;
    std::uint64_t seed = 20240611;
};

inline constexpr int criterion_count = 10;

/// Labeled MS4 frame counts on 1, 2, 3 points.
inline constexpr std::uint64_t ms4_frame_counts[] = { 1, 8, 115 };

/// Runs one acceptance check (1-based).
[[nodiscard]] CriterionResult run_criterion( int number, const ReproduceOptions& options = {} );
[[nodiscard]] std::vector< CriterionResult > run_all_criteria( const ReproduceOptions& options = {} );

} // namespace workbench
