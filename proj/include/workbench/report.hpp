#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace workbench {

/// A refuting valuation together with the first point where the formula fails.
struct Counterexample
{
    std::map< std::string, std::vector< std::string > > valuation;
    std::string point;
};

/// Verdict of a validity or frame-condition check. A refuted formula carries
/// `counterexample`; a refuted frame condition lists its witness points.
struct CheckReport
{
    bool valid = true;
    std::optional< Counterexample > counterexample;
    std::vector< std::string > witness;
    std::string frame_id;
    std::string formula;
    std::uint64_t valuations_tried = 0;

    explicit operator bool() const noexcept { return valid; }
};

} // namespace workbench
