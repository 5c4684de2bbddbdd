#pragma once
// bigcomb.hpp - combinatorial kernels behind every counting formula: exact
// binomials and powers, plus controlled-precision logarithms and scientific
// rounding for values far beyond any floating-point range.

#include <cstdint>
#include <string>

#include "sumdiff/bigcount.hpp"

namespace sumdiff {

// Natural log of a BigCount together with a guaranteed relative error bound.
struct LogMagnitude {
    double ln_value = 0.0;
    double rel_err_bound = 0.0;
};

// Scientific-notation view of a BigCount: mantissa in [1, 10), rounded
// half-even at a fixed number of significant decimal digits.
struct SciApprox {
    double mantissa = 0.0;
    std::int64_t exponent10 = 0;
    std::string digits;         // the rounded significant digits, e.g. "6314107319"

    std::string str() const;    // "6.314107319e43546"
};

// Relative error guaranteed by log_of. The value is derived from the top 64
// significant bits plus the bit length, both combined in double arithmetic:
// truncation contributes < 2^-63 and each double step at most a few ulp, so
// 2^-46 holds with a wide margin (the contract needs 2^-40).
inline constexpr double kLogRelErrBound = 0x1p-46;

// C(n, k), exact. k > n yields 0 so inclusion-exclusion loops stay uniform.
BigCount binomial(std::uint64_t n, std::uint64_t k);

// base^exp, exact, with 0^0 = 1.
BigCount pow_int(std::uint64_t base, std::uint64_t exp);

// Natural log from the top 64 significant bits plus the bit length.
// log_of(1) is exactly 0. Throws std::domain_error for x = 0.
LogMagnitude log_of(const BigCount& x);

// Round x to sig_digits significant decimal digits, half-even.
// Throws std::domain_error for x = 0 or sig_digits < 1.
SciApprox sci_round(const BigCount& x, int sig_digits = 10);

}  // namespace sumdiff
