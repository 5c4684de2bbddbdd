#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "sumdiff/bigcomb.hpp"
#include "support/reference.hpp"

using sumdiff::BigCount;
using sumdiff::binomial;
using sumdiff::log_of;
using sumdiff::pow_int;
using sumdiff::sci_round;

TEST_SUITE_BEGIN("bigcomb");

TEST_CASE("binomial basics") {
    CHECK(binomial(12, 4) == 495);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 7) == 0);  // k > n vanishes
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(64, 32) == BigCount::from_decimal("1832624140942590534"));
}

TEST_CASE("Pascal identity and symmetry, exhaustive to n = 64") {
    for (std::uint64_t n = 1; n <= 64; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) {
            CHECK(binomial(n, k) == BigCount(mpz_class(binomial(n - 1, k - 1).raw() +
                                                       binomial(n - 1, k).raw())));
            CHECK(binomial(n, k) == binomial(n, n - k));
        }
    }
}

TEST_CASE("binomial agrees with GMP's own on large arguments") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        const std::uint64_t n = rng() % 200000;
        const std::uint64_t k = rng() % 3000;
        mpz_class ref;
        mpz_bin_uiui(ref.get_mpz_t(), n, k);
        CHECK(binomial(n, k).raw() == ref);
    }
}

TEST_CASE("pow_int") {
    CHECK(pow_int(7, 3) == 343);
    CHECK(pow_int(11, 5) == 161051);
    CHECK(pow_int(0, 0) == 1);
    CHECK(pow_int(0, 9) == 0);
    for (std::uint64_t x : {0ull, 1ull, 5ull, 1000000ull}) CHECK(pow_int(x, 0) == 1);

    mpz_class ref;
    mpz_ui_pow_ui(ref.get_mpz_t(), 13, 301);
    CHECK(pow_int(13, 301).raw() == ref);
}

TEST_CASE("log_of fixed points") {
    CHECK(log_of(BigCount(1)).ln_value == 0.0);
    CHECK_THROWS_AS(log_of(BigCount(0)), std::domain_error);

    const auto lg = log_of(BigCount(2381));
    CHECK(lg.ln_value == doctest::Approx(std::log(2381.0)).epsilon(1e-13));
    CHECK(lg.rel_err_bound <= 0x1p-40);

    const auto big = log_of(pow_int(10, 100));
    CHECK(big.ln_value ==
          doctest::Approx(100.0 * std::numbers::ln10).epsilon(1e-13));
}

TEST_CASE("log_of random values stay inside the error contract") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20240517ul);
    std::mt19937_64 bits_rng(99);
    for (int i = 0; i < 300; ++i) {
        const unsigned long bits = 1 + bits_rng() % 4096;
        mpz_class x = rng.get_z_bits(bits) + 1;  // >= 1
        const BigCount bc{x};
        const auto lg = log_of(bc);
        const double ref = testref::ref_ln(x);
        CHECK(lg.rel_err_bound <= 0x1p-40);
        CHECK(std::fabs(lg.ln_value - ref) <= lg.rel_err_bound * ref + 1e-300);
        CHECK(std::fabs(lg.ln_value - ref) <= 0x1p-40 * ref + 1e-300);
    }
}

TEST_CASE("sci_round examples") {
    const auto a = sci_round(BigCount(2381), 3);
    CHECK(a.digits == "238");
    CHECK(a.exponent10 == 3);
    CHECK(a.mantissa == doctest::Approx(2.38));
    CHECK(a.str() == "2.38e3");

    const auto b = sci_round(BigCount(1000), 2);
    CHECK(b.digits == "10");
    CHECK(b.exponent10 == 3);
    CHECK(b.str() == "1.0e3");

    // carry across the exponent boundary
    const auto c = sci_round(BigCount(999951), 4);
    CHECK(c.digits == "1000");
    CHECK(c.exponent10 == 6);
    CHECK(c.str() == "1.000e6");

    CHECK_THROWS_AS(sci_round(BigCount(0), 3), std::domain_error);
    CHECK_THROWS_AS(sci_round(BigCount(5), 0), std::domain_error);
}

TEST_CASE("sci_round half-even ties") {
    CHECK(sci_round(BigCount(25), 1).digits == "2");
    CHECK(sci_round(BigCount(35), 1).digits == "4");
    CHECK(sci_round(BigCount(250), 2).digits == "25");
    CHECK(sci_round(BigCount(251), 2).digits == "25");  // not a tie: round down
    CHECK(sci_round(BigCount(2501), 2).digits == "25");
    CHECK(sci_round(BigCount(2511), 2).digits == "25");
    CHECK(sci_round(BigCount(2551), 2).digits == "26");
}

namespace {

// independent rounding route: pure integer arithmetic, no string surgery
sumdiff::SciApprox sci_by_integers(const BigCount& x, int sig) {
    const std::string dec = x.to_decimal();
    const auto len = static_cast<long>(dec.size());
    sumdiff::SciApprox out;
    out.exponent10 = len - 1;
    if (len <= sig) {
        mpz_class scaled = x.raw();
        for (long i = len; i < sig; ++i) scaled *= 10;
        out.digits = scaled.get_str();
        return out;
    }
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(len - sig));
    mpz_class q = x.raw() / p10;
    const mpz_class rem = x.raw() % p10;
    const mpz_class half = p10 / 2;
    if (rem > half || (rem == half && mpz_odd_p(q.get_mpz_t()))) q += 1;
    std::string digits = q.get_str();
    if (static_cast<long>(digits.size()) > sig) {  // 999 -> 1000 carry
        digits.pop_back();
        ++out.exponent10;
    }
    out.digits = digits;
    return out;
}

}  // namespace

TEST_CASE("sci_round matches the integer-arithmetic route on random values") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(424242ul);
    std::mt19937_64 aux(5);
    for (int i = 0; i < 400; ++i) {
        const unsigned long bits = 1 + aux() % 600;
        const BigCount x{mpz_class(rng.get_z_bits(bits) + 1)};
        const int sig = 1 + int(aux() % 12);
        const auto got = sci_round(x, sig);
        const auto want = sci_by_integers(x, sig);
        CHECK(got.digits == want.digits);
        CHECK(got.exponent10 == want.exponent10);
        CHECK(got.mantissa >= 1.0);
        CHECK(got.mantissa < 10.0);
    }
}

TEST_CASE("BigCount decimal round-trip and invariants") {
    CHECK_THROWS_AS(BigCount(mpz_class(-3)), std::domain_error);
    CHECK_THROWS_AS(BigCount::from_decimal("12x"), std::invalid_argument);
    CHECK(BigCount::from_decimal("0") == 0);
    CHECK(BigCount(0).digits10() == 1);
    CHECK(BigCount(0).bit_length() == 0);
    CHECK(BigCount(1).bit_length() == 1);

    gmp_randclass rng(gmp_randinit_default);
    rng.seed(777ul);
    for (int i = 0; i < 200; ++i) {
        const BigCount x{mpz_class(rng.get_z_bits(1 + i * 7))};
        CHECK(BigCount::from_decimal(x.to_decimal()) == x);
        CHECK(x.digits10() == x.to_decimal().size());
    }
}

TEST_SUITE_END();
