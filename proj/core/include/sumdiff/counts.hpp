#pragma once
// counts.hpp - closed-form cardinalities for the bounded-coordinate
// construction
//     W(m, L, B) = { x in N^m : x_i <= B for all i, sum x_i <= L }
// and the integer set U = g(W) it induces, together with the certified
// lower bound
//     theta >= 1 + ln(|U-U| / |U+U|) / ln(2 max(U) + 1).
//
// The alternating inclusion-exclusion sum for |W| is always evaluated in
// exact integers; floating point enters only after exact counts exist
// (logarithms and scientific rounding). The unbounded-coordinate simplex
// V(m, L) of the earlier construction is covered by the baseline_* calls.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumdiff/bigcomb.hpp"
#include "sumdiff/bigcount.hpp"

namespace sumdiff {

// One candidate construction. Canonical form keeps L <= m*B, since a larger
// sum cap cannot change W.
struct Params {
    std::uint64_t m = 0;  // number of coordinates
    std::uint64_t L = 0;  // cap on the coordinate sum
    std::uint64_t B = 0;  // cap on each coordinate

    friend auto operator<=>(const Params&, const Params&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Params& p) {
        return os << "(m=" << p.m << ", L=" << p.L << ", B=" << p.B << ")";
    }
};

// Raised where theta is undefined: q < 3 (log q = 0) or |U| < 2 (trivial set).
class DegenerateParams : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The four exact cardinalities attached to one Params.
struct SetCounts {
    BigCount u;  // |U| = |W(m, L, B)|
    BigCount s;  // |U + U|
    BigCount d;  // |U - U|
    BigCount q;  // 2 max(U) + 1
};

// A certified lower bound on theta. lower_micro is floor(theta * 1e6):
// rounding toward -inf keeps the reported value a valid lower bound up to
// the propagated log error.
struct ThetaBound {
    std::int64_t lower_micro = 0;
    double ln_ratio = 0.0;  // ln d - ln s
    double ln_q = 0.0;

    double lower() const { return static_cast<double>(lower_micro) / 1e6; }
    std::string lower_str() const;  // fixed six fractional digits, e.g. "1.013631"
};

// Absolute error bound on 1 + ln_ratio/ln_q under the log contract: each of
// the three logs carries relative error <= kLogRelErrBound and d, s <= q.
inline constexpr double kThetaAbsErrBound = 4 * kLogRelErrBound;

// Weights L_0 = 1, L_k = 2L * L_{k-1} + 1 of the baseline encoding f.
struct BaselineWeights {
    std::vector<BigCount> weights;
};

Params canonicalize(Params p) noexcept;

// |W(m, L, B)| by inclusion-exclusion over coordinates exceeding B; exact.
BigCount count_w(Params p);

// |U + U| = |W(m, 2L, 2B)|.
BigCount count_sum(Params p);

// |U - U|: split a difference vector by its k positive coordinates.
BigCount count_diff(Params p);

// q = 2 max(U) + 1, max attained by greedily putting B into the heaviest
// coordinates until the sum cap L is spent.
BigCount q_value(Params p);

SetCounts set_counts(Params p);

// theta from already-computed counts; throws DegenerateParams.
ThetaBound theta_from(const SetCounts& c);

// theta for one parameter triple; throws DegenerateParams.
ThetaBound theta(Params p);

// Baseline construction V(m, L) with encoding f. Both require m, L >= 1.
BaselineWeights baseline_weights(std::uint64_t m, std::uint64_t L);
SetCounts baseline_counts(std::uint64_t m, std::uint64_t L);
ThetaBound baseline_theta(std::uint64_t m, std::uint64_t L);

}  // namespace sumdiff
