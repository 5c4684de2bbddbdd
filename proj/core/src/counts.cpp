#include "sumdiff/counts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

namespace sumdiff {
namespace {

bool degenerate(std::uint64_t m, std::uint64_t L, std::uint64_t B) {
    return m == 0 || L == 0 || B == 0;
}

// Steps C(n, m) down to C(n - count, m) via C(n-1, m) = C(n, m)(n-m)/n.
// Factors are batched into 64-bit products; every flush covers whole
// decrements, so the value after each divexact is again a binomial and the
// division is exact.
void step_top_down(mpz_class& top, std::uint64_t& n, std::uint64_t m, std::uint64_t count) {
    while (count > 0) {
        std::uint64_t num = 1, den = 1;
        while (count > 0 && den <= UINT64_MAX / n) {
            num *= n - m;
            den *= n;
            --n;
            --count;
        }
        mpz_mul_ui(top.get_mpz_t(), top.get_mpz_t(), num);
        mpz_divexact_ui(top.get_mpz_t(), top.get_mpz_t(), den);
    }
}

// |W(m, L, B)| for canonical parameters:
//   sum_{k=0}^{floor(L/(B+1))} (-1)^k C(m,k) C(m+L-k(B+1), m)
// Both binomials are stepped incrementally between terms: C(m,k) by one
// multiply/divide, the second by B+1 decrements of its top index.
// `top_init` may carry a precomputed C(m+L, m) so callers evaluating long
// runs of related counts skip the start-up product.
mpz_class count_w_canonical(std::uint64_t m, std::uint64_t L, std::uint64_t B,
                            const mpz_class* top_init = nullptr) {
    if (degenerate(m, L, B)) return 1;

    const std::uint64_t kmax = L / (B + 1);  // < m whenever L <= m*B

    mpz_class choose_mk{1};  // C(m, k)
    mpz_class top = top_init ? *top_init : mpz_class(binomial(m + L, m).raw());
    std::uint64_t n = m + L;  // current top index of `top`

    mpz_class acc{0}, term;
    for (std::uint64_t k = 0;; ++k) {
        mpz_mul(term.get_mpz_t(), choose_mk.get_mpz_t(), top.get_mpz_t());
        if (k & 1)
            mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
        else
            mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
        if (k == kmax) break;

        mpz_mul_ui(choose_mk.get_mpz_t(), choose_mk.get_mpz_t(), m - k);
        mpz_divexact_ui(choose_mk.get_mpz_t(), choose_mk.get_mpz_t(), k + 1);
        step_top_down(top, n, m, B + 1);
    }
    return acc;
}

std::int64_t floor_micro(double v) {
    return static_cast<std::int64_t>(std::floor(v * 1e6));
}

}  // namespace

Params canonicalize(Params p) noexcept {
    if (p.m == 0 || p.B == 0) {
        p.L = 0;
    } else if (p.m <= p.L / p.B) {
        p.L = p.m * p.B;  // m <= L/B, so the product cannot overflow past L
    }
    return p;
}

BigCount count_w(Params p) {
    p = canonicalize(p);
    return BigCount(count_w_canonical(p.m, p.L, p.B));
}

BigCount count_sum(Params p) {
    p = canonicalize(p);
    return count_w({p.m, 2 * p.L, 2 * p.B});
}

BigCount count_diff(Params p) {
    p = canonicalize(p);
    if (degenerate(p.m, p.L, p.B)) return BigCount(1u);

    const std::uint64_t kmax = std::min(p.m, p.L);
    mpz_class acc{0};
    mpz_class choose_mk{1};  // C(m, k)
    // C(m-k+L, m-k), carried across k via C(n-1, r-1) = C(n, r) r / n;
    // usable whenever the k-th non-positive block is already canonical.
    mpz_class neg_top(binomial(p.m + p.L, p.m).raw());
    mpz_class term;

    for (std::uint64_t k = 0;; ++k) {
        // k positive coordinates, shifted down by one: caps B-1, sum L-k
        const Params pos = canonicalize({k, p.L - k, p.B - 1});
        // remaining m-k coordinates hold the negated non-positive part
        const Params neg = canonicalize({p.m - k, p.L, p.B});

        mpz_class a = count_w_canonical(pos.m, pos.L, pos.B);
        const mpz_class* init = (neg.L == p.L) ? &neg_top : nullptr;
        mpz_class b = count_w_canonical(neg.m, neg.L, neg.B, init);

        mpz_mul(term.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_mul(term.get_mpz_t(), term.get_mpz_t(), choose_mk.get_mpz_t());
        mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
        if (k == kmax) break;

        mpz_mul_ui(choose_mk.get_mpz_t(), choose_mk.get_mpz_t(), p.m - k);
        mpz_divexact_ui(choose_mk.get_mpz_t(), choose_mk.get_mpz_t(), k + 1);
        mpz_mul_ui(neg_top.get_mpz_t(), neg_top.get_mpz_t(), p.m - k);
        mpz_divexact_ui(neg_top.get_mpz_t(), neg_top.get_mpz_t(), p.m - k + p.L);
    }
    return BigCount(std::move(acc));
}

BigCount q_value(Params p) {
    p = canonicalize(p);
    if (degenerate(p.m, p.L, p.B)) return BigCount(1u);  // U = {0}

    const std::uint64_t t = p.L / p.B;
    const std::uint64_t r = p.L % p.B;
    const std::uint64_t base = 2 * p.B + 1;

    // q = (2B+1)^m - (2B+1)^(m-t) + 2r(2B+1)^(m-t-1) + 1, and t = m forces
    // r = 0 under the canonical cap, so the last exponent never underflows
    mpz_class q(pow_int(base, p.m).raw());
    q -= pow_int(base, p.m - t).raw();
    if (r > 0) q += 2 * mpz_class(r) * pow_int(base, p.m - t - 1).raw();
    q += 1;
    return BigCount(std::move(q));
}

SetCounts set_counts(Params p) {
    p = canonicalize(p);
    return SetCounts{count_w(p), count_sum(p), count_diff(p), q_value(p)};
}

std::string ThetaBound::lower_str() const {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", lower());
    return buf;
}

ThetaBound theta_from(const SetCounts& c) {
    if (c.q < BigCount(3u) || c.u < BigCount(2u))
        throw DegenerateParams("theta undefined: requires q >= 3 and |U| >= 2");
    ThetaBound tb;
    tb.ln_ratio = log_of(c.d).ln_value - log_of(c.s).ln_value;
    tb.ln_q = log_of(c.q).ln_value;
    tb.lower_micro = floor_micro(1.0 + tb.ln_ratio / tb.ln_q);
    return tb;
}

ThetaBound theta(Params p) {
    return theta_from(set_counts(p));
}

BaselineWeights baseline_weights(std::uint64_t m, std::uint64_t L) {
    if (m < 1 || L < 1) throw std::domain_error("baseline_weights: m and L must be >= 1");
    BaselineWeights w;
    w.weights.reserve(m);
    mpz_class cur{1};
    for (std::uint64_t k = 0; k < m; ++k) {
        if (k > 0) {
            mpz_mul_ui(cur.get_mpz_t(), cur.get_mpz_t(), 2 * L);
            mpz_add_ui(cur.get_mpz_t(), cur.get_mpz_t(), 1);
        }
        w.weights.emplace_back(cur);
    }
    return w;
}

SetCounts baseline_counts(std::uint64_t m, std::uint64_t L) {
    if (m < 1 || L < 1) throw std::domain_error("baseline_counts: m and L must be >= 1");
    SetCounts c;
    c.u = binomial(m + L, m);
    c.s = binomial(m + 2 * L, m);
    c.d = count_diff({m, L, L});  // per-coordinate cap is inactive on V(m, L)
    // max f is the whole sum cap on the heaviest weight: L * L_{m-1}
    mpz_class q(baseline_weights(m, L).weights.back().raw());
    mpz_mul_ui(q.get_mpz_t(), q.get_mpz_t(), 2 * L);
    mpz_add_ui(q.get_mpz_t(), q.get_mpz_t(), 1);
    c.q = BigCount(std::move(q));
    return c;
}

ThetaBound baseline_theta(std::uint64_t m, std::uint64_t L) {
    return theta_from(baseline_counts(m, L));
}

}  // namespace sumdiff
