#include "sumdiff/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <set>
#include <stdexcept>
#include <thread>
#include <variant>

#include "sumdiff/bigcomb.hpp"

namespace sumdiff::search {
namespace {

using Outcome = std::variant<Candidate, Skipped>;

Outcome evaluate(Params p) {
    SetCounts c;
    c.u = count_w(p);
    c.q = q_value(p);
    if (c.q < BigCount(3u)) return Skipped{p, "q < 3 (theta undefined)"};
    if (c.u < BigCount(2u)) return Skipped{p, "|U| < 2 (trivial set)"};
    c.s = count_sum(p);
    c.d = count_diff(p);

    const double ln_ratio = log_of(c.d).ln_value - log_of(c.s).ln_value;
    const double ln_q = log_of(c.q).ln_value;

    Candidate cand;
    cand.params = p;
    cand.theta_est = 1.0 + ln_ratio / ln_q;
    const double scaled = cand.theta_est * 1e6;
    cand.near_grid_point = std::fabs(scaled - std::round(scaled)) < kThetaAbsErrBound * 1e6;
    return cand;
}

unsigned resolve_threads(unsigned requested, std::size_t work_items) {
    unsigned n = requested ? requested : std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    return static_cast<unsigned>(std::min<std::size_t>(n, work_items));
}

}  // namespace

const Candidate& SearchResult::best() const {
    if (ranked.empty()) throw std::logic_error("SearchResult: empty result has no best candidate");
    return ranked.front();
}

SearchResult sweep(const SearchSpec& spec, unsigned threads) {
    if (spec.m_range.lo > spec.m_range.hi || spec.B_range.lo > spec.B_range.hi ||
        spec.L_values.empty() || spec.top_n < 1)
        throw std::invalid_argument("sweep: empty search grid");

    // canonical dedup: distinct raw triples can describe the same W
    std::vector<Params> grid;
    std::set<Params> seen;
    for (std::uint64_t m = spec.m_range.lo; m <= spec.m_range.hi; ++m)
        for (const std::uint64_t L : spec.L_values)
            for (std::uint64_t B = spec.B_range.lo; B <= spec.B_range.hi; ++B) {
                const Params p = canonicalize({m, L, B});
                if (seen.insert(p).second) grid.push_back(p);
            }

    std::vector<Outcome> outcomes(grid.size(), Skipped{});
    const unsigned n_threads = resolve_threads(threads, grid.size());
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) outcomes[i] = evaluate(grid[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(n_threads);
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = next.fetch_add(1); i < grid.size();
                         i = next.fetch_add(1))
                        outcomes[i] = evaluate(grid[i]);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    SearchResult result;
    for (auto& o : outcomes) {
        if (std::holds_alternative<Candidate>(o))
            result.ranked.push_back(std::move(std::get<Candidate>(o)));
        else
            result.skipped.push_back(std::move(std::get<Skipped>(o)));
    }

    std::sort(result.ranked.begin(), result.ranked.end(),
              [](const Candidate& a, const Candidate& b) {
                  if (a.theta_est != b.theta_est) return a.theta_est > b.theta_est;
                  return a.params < b.params;
              });
    if (result.ranked.size() > spec.top_n) result.ranked.resize(spec.top_n);

    if (spec.confirm)
        for (Candidate& c : result.ranked) c.theta_exact = theta(c.params);
    return result;
}

SearchResult refine(Params center, std::uint64_t radius_m, bool confirm, unsigned threads) {
    SearchSpec spec;
    spec.m_range.lo = center.m > radius_m ? center.m - radius_m : 0;
    spec.m_range.hi = center.m + radius_m;
    spec.L_values = {center.L};
    spec.B_range = {center.B, center.B};
    spec.top_n = static_cast<std::size_t>(2 * radius_m + 1);
    spec.confirm = confirm;
    return sweep(spec, threads);
}

Params suggest_start(std::uint64_t L) {
    if (L < 1) throw std::domain_error("suggest_start: L must be >= 1");
    return {(5 * L + 2) / 4, L, 5};  // round(5L/4), half away from zero
}

}  // namespace sumdiff::search
