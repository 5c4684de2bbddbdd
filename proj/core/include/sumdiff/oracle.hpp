#pragma once
// oracle.hpp - brute-force ground truth. Enumerates W(m, L, B) literally,
// maps it to integers, and builds U+U / U-U by pairwise set arithmetic.
// Exists to certify the closed forms at small scale; the closed forms then
// carry the result to scales no enumeration could reach.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sumdiff/bigcount.hpp"
#include "sumdiff/counts.hpp"

namespace sumdiff::oracle {

using Vector = std::vector<std::uint32_t>;

// Work limits. Exceeding one raises ResourceCapError, never silent truncation.
inline constexpr std::uint64_t kDefaultVectorCap = 1'000'000;
inline constexpr std::uint64_t kDefaultPairCap = 100'000'000;

class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumeratedSet {
    Params params;                   // canonical
    std::vector<Vector> vectors;     // lexicographic
    std::vector<BigCount> integers;  // image under g, sorted ascending, deduplicated

    const BigCount& max_u() const { return integers.back(); }
};

// All vectors of W(m, L, B) exactly once, lexicographic order.
// Throws ResourceCapError when count_w(p) > cap.
std::vector<Vector> enum_w(Params p, std::uint64_t cap = kDefaultVectorCap);

// g(x) = sum x_k (2B+1)^k, 0-based coordinates.
BigCount encode_g(const Vector& x, std::uint64_t B);

// f(x) = sum x_k L_k with the baseline recurrence weights.
BigCount encode_f(const Vector& x, const BaselineWeights& weights);

// Enumerate W and encode it; asserts g is injective on W itself.
EnumeratedSet build_u(Params p, std::uint64_t cap = kDefaultVectorCap);

// Literal pairwise set arithmetic. Sorted, deduplicated elements.
std::vector<mpz_class> sum_elements(const EnumeratedSet& u,
                                    std::uint64_t pair_cap = kDefaultPairCap);
std::vector<mpz_class> diff_elements(const EnumeratedSet& u,
                                     std::uint64_t pair_cap = kDefaultPairCap);
BigCount sumset_size(const EnumeratedSet& u, std::uint64_t pair_cap = kDefaultPairCap);
BigCount diffset_size(const EnumeratedSet& u, std::uint64_t pair_cap = kDefaultPairCap);

// True iff g maps distinct vector sums (and differences) over W to distinct
// integers, i.e. |{g(x)+g(y)}| = |{x+y}| and |{g(x)-g(y)}| = |{x-y}|.
bool check_injective(Params p, std::uint64_t cap = kDefaultVectorCap,
                     std::uint64_t pair_cap = kDefaultPairCap);

// Same check for f on the simplex V(m, L).
bool check_injective_baseline(std::uint64_t m, std::uint64_t L,
                              std::uint64_t cap = kDefaultVectorCap,
                              std::uint64_t pair_cap = kDefaultPairCap);

}  // namespace sumdiff::oracle
