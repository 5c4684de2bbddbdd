#pragma once
// bigcount.hpp - exact non-negative integer counts.
//
// BigCount wraps a GMP integer and enforces the one invariant every
// cardinality in this library shares: the value is never negative.
// Internal arithmetic runs on raw mpz_class and is wrapped on the way out.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace sumdiff {

class BigCount {
public:
    BigCount() = default;
    BigCount(unsigned long v) : v_(v) {}        // counts are spelled as literals in tests
    explicit BigCount(mpz_class v);             // throws std::domain_error if v < 0

    // Exact decimal (de)serialization; round-trips bit-exactly.
    static BigCount from_decimal(const std::string& s);
    std::string to_decimal() const { return v_.get_str(); }

    const mpz_class& raw() const noexcept { return v_; }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    std::size_t bit_length() const;             // bits of the value, 0 for zero
    std::size_t digits10() const;               // exact decimal length ("0" has 1)
    std::uint64_t to_u64() const;               // throws std::overflow_error if it does not fit

    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) noexcept {
        const int c = mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }
    friend bool operator==(const BigCount& a, const BigCount& b) noexcept {
        return mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t()) == 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigCount& v) { return os << v.v_; }

private:
    mpz_class v_{0};
};

}  // namespace sumdiff
