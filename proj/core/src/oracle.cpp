#include "sumdiff/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

namespace sumdiff::oracle {
namespace {

void enumerate(std::uint64_t m, std::uint64_t L, std::uint64_t B, std::size_t i,
               std::uint64_t remaining, Vector& cur, std::vector<Vector>& out) {
    if (i == m) {
        out.push_back(cur);
        return;
    }
    const std::uint64_t hi = std::min(B, remaining);
    for (std::uint64_t v = 0; v <= hi; ++v) {
        cur[i] = static_cast<std::uint32_t>(v);
        enumerate(m, L, B, i + 1, remaining - v, cur, out);
    }
}

void require_pair_budget(std::size_t n, std::uint64_t pair_cap) {
    if (n > 0 && n > pair_cap / n)
        throw ResourceCapError("pairwise set arithmetic over " + std::to_string(n) +
                               " elements exceeds the pair budget of " +
                               std::to_string(pair_cap));
}

std::vector<mpz_class> encode_all(const std::vector<Vector>& vectors,
                                  const std::vector<mpz_class>& weights) {
    std::vector<mpz_class> out;
    out.reserve(vectors.size());
    mpz_class acc;
    for (const Vector& x : vectors) {
        acc = 0;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k] != 0) acc += x[k] * weights[k];
        out.push_back(acc);
    }
    return out;
}

std::vector<mpz_class> g_weights(std::size_t m, std::uint64_t B) {
    std::vector<mpz_class> w(m);
    mpz_class cur{1};
    for (std::size_t k = 0; k < m; ++k) {
        w[k] = cur;
        cur *= 2 * B + 1;
    }
    return w;
}

template <typename T>
std::size_t distinct_count(std::vector<T>& items) {
    std::sort(items.begin(), items.end());
    return static_cast<std::size_t>(std::unique(items.begin(), items.end()) - items.begin());
}

// g injective on W+W and W-W <=> distinct vector sums (differences) map to
// distinct integers, i.e. the counts on both sides agree.
bool injective_on_pairs(const std::vector<Vector>& vectors,
                        const std::vector<mpz_class>& images, std::uint64_t pair_cap) {
    const std::size_t n = vectors.size();
    require_pair_budget(n, pair_cap);
    const std::size_t m = n ? vectors[0].size() : 0;

    std::vector<std::vector<std::int64_t>> vsum, vdiff;
    std::vector<mpz_class> isum, idiff;
    vsum.reserve(n * (n + 1) / 2);
    isum.reserve(n * (n + 1) / 2);
    vdiff.reserve(n * n);
    idiff.reserve(n * n);

    std::vector<std::int64_t> tmp(m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j >= i) {
                for (std::size_t k = 0; k < m; ++k)
                    tmp[k] = std::int64_t(vectors[i][k]) + std::int64_t(vectors[j][k]);
                vsum.push_back(tmp);
                isum.push_back(images[i] + images[j]);
            }
            for (std::size_t k = 0; k < m; ++k)
                tmp[k] = std::int64_t(vectors[i][k]) - std::int64_t(vectors[j][k]);
            vdiff.push_back(tmp);
            idiff.push_back(images[i] - images[j]);
        }
    }
    return distinct_count(vsum) == distinct_count(isum) &&
           distinct_count(vdiff) == distinct_count(idiff);
}

}  // namespace

std::vector<Vector> enum_w(Params p, std::uint64_t cap) {
    p = canonicalize(p);
    const BigCount predicted = count_w(p);
    if (predicted > BigCount(static_cast<unsigned long>(cap)))
        throw ResourceCapError("enum_w: |W| = " + predicted.to_decimal() +
                               " exceeds the cap of " + std::to_string(cap) +
                               "; use the closed forms instead");
    std::vector<Vector> out;
    out.reserve(predicted.to_u64());
    Vector cur(p.m, 0);
    enumerate(p.m, p.L, p.B, 0, p.L, cur, out);
    return out;
}

BigCount encode_g(const Vector& x, std::uint64_t B) {
    mpz_class acc{0};
    mpz_class weight{1};
    for (const std::uint32_t c : x) {
        if (c != 0) acc += c * weight;
        weight *= 2 * B + 1;
    }
    return BigCount(std::move(acc));
}

BigCount encode_f(const Vector& x, const BaselineWeights& weights) {
    if (x.size() != weights.weights.size())
        throw std::invalid_argument("encode_f: vector and weight lengths differ");
    mpz_class acc{0};
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] != 0) acc += x[k] * weights.weights[k].raw();
    return BigCount(std::move(acc));
}

EnumeratedSet build_u(Params p, std::uint64_t cap) {
    EnumeratedSet es;
    es.params = canonicalize(p);
    es.vectors = enum_w(es.params, cap);
    es.integers.reserve(es.vectors.size());
    for (const Vector& x : es.vectors) es.integers.push_back(encode_g(x, es.params.B));
    std::sort(es.integers.begin(), es.integers.end());
    es.integers.erase(std::unique(es.integers.begin(), es.integers.end()), es.integers.end());
    if (es.integers.size() != es.vectors.size())
        throw std::logic_error("build_u: encoding collided on W itself");
    return es;
}

std::vector<mpz_class> sum_elements(const EnumeratedSet& u, std::uint64_t pair_cap) {
    const std::size_t n = u.integers.size();
    require_pair_budget(n, pair_cap);
    std::vector<mpz_class> out;
    out.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            out.push_back(u.integers[i].raw() + u.integers[j].raw());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<mpz_class> diff_elements(const EnumeratedSet& u, std::uint64_t pair_cap) {
    const std::size_t n = u.integers.size();
    require_pair_budget(n, pair_cap);
    std::vector<mpz_class> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.push_back(u.integers[i].raw() - u.integers[j].raw());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BigCount sumset_size(const EnumeratedSet& u, std::uint64_t pair_cap) {
    return BigCount(static_cast<unsigned long>(sum_elements(u, pair_cap).size()));
}

BigCount diffset_size(const EnumeratedSet& u, std::uint64_t pair_cap) {
    return BigCount(static_cast<unsigned long>(diff_elements(u, pair_cap).size()));
}

bool check_injective(Params p, std::uint64_t cap, std::uint64_t pair_cap) {
    p = canonicalize(p);
    const std::vector<Vector> vectors = enum_w(p, cap);
    const auto images = encode_all(vectors, g_weights(p.m, p.B));
    return injective_on_pairs(vectors, images, pair_cap);
}

bool check_injective_baseline(std::uint64_t m, std::uint64_t L, std::uint64_t cap,
                              std::uint64_t pair_cap) {
    if (m < 1 || L < 1) throw std::domain_error("check_injective_baseline: m, L >= 1");
    // V(m, L) is W(m, L, B) with the coordinate cap inactive
    const std::vector<Vector> vectors = enum_w({m, L, L}, cap);
    const BaselineWeights bw = baseline_weights(m, L);
    std::vector<mpz_class> weights;
    weights.reserve(m);
    for (const BigCount& w : bw.weights) weights.push_back(w.raw());
    const auto images = encode_all(vectors, weights);
    return injective_on_pairs(vectors, images, pair_cap);
}

}  // namespace sumdiff::oracle
