#pragma once
// search.hpp - two-phase parameter search over (m, L, B). Phase one ranks
// every grid point by a theta estimate whose counts are computed exactly
// (the alternating sum is float-hostile; only the final logs are doubles).
// Phase two optionally re-derives the certified bound for the leaders.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumdiff/counts.hpp"

namespace sumdiff::search {

struct IntRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;  // inclusive
};

struct SearchSpec {
    IntRange m_range;
    std::vector<std::uint64_t> L_values;
    IntRange B_range;
    std::size_t top_n = 1;
    bool confirm = false;
};

struct Candidate {
    Params params;                          // canonical
    double theta_est = 0.0;                 // 1 + ln_ratio/ln_q, unrounded
    std::optional<ThetaBound> theta_exact;  // set when the sweep confirmed
    // Estimate sits within the log error band of a 1e-6 grid point, so the
    // floored 6-decimal value could differ by one ulp from the true floor.
    bool near_grid_point = false;
};

struct Skipped {
    Params params;
    std::string reason;
};

struct SearchResult {
    std::vector<Candidate> ranked;  // descending theta_est, ties by smallest (m, L, B)
    std::vector<Skipped> skipped;

    bool has_best() const { return !ranked.empty(); }
    const Candidate& best() const;  // throws std::logic_error when ranked is empty
};

// Evaluate every (m, L, B) in the grid. Degenerate candidates are recorded
// in `skipped`, not fatal; an empty grid is an std::invalid_argument.
// threads = 0 picks the hardware concurrency; any thread count yields the
// identical result.
SearchResult sweep(const SearchSpec& spec, unsigned threads = 0);

// Sweep m in [center.m - radius_m, center.m + radius_m] with L and B fixed;
// returns the whole window ranked.
SearchResult refine(Params center, std::uint64_t radius_m, bool confirm = true,
                    unsigned threads = 0);

// Grid-independent starting point: B = 5 and m ~ 5L/4 tend to do best.
Params suggest_start(std::uint64_t L);

}  // namespace sumdiff::search
