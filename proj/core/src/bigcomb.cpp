#include "sumdiff/bigcomb.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace sumdiff {

BigCount binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigCount{};
    if (k > n - k) k = n - k;
    // running product: after step i the value is C(n-k+i, i), so every
    // division by i is exact
    mpz_class r{1};
    for (std::uint64_t i = 1; i <= k; ++i) {
        mpz_mul_ui(r.get_mpz_t(), r.get_mpz_t(), n - k + i);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
    }
    return BigCount(std::move(r));
}

BigCount pow_int(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);  // GMP defines 0^0 = 1
    return BigCount(std::move(r));
}

LogMagnitude log_of(const BigCount& x) {
    if (x.is_zero()) throw std::domain_error("log_of: log of zero is undefined");
    const std::size_t bits = x.bit_length();
    double ln;
    if (bits <= 64) {
        ln = std::log(static_cast<double>(mpz_get_ui(x.raw().get_mpz_t())));
    } else {
        // x = top * 2^shift + frac with top in [2^63, 2^64); dropping frac
        // perturbs the log by less than 2^-63
        const std::size_t shift = bits - 64;
        mpz_class top;
        mpz_tdiv_q_2exp(top.get_mpz_t(), x.raw().get_mpz_t(), shift);
        ln = std::log(static_cast<double>(mpz_get_ui(top.get_mpz_t()))) +
             static_cast<double>(shift) * std::numbers::ln2;
    }
    return {ln, kLogRelErrBound};
}

std::string SciApprox::str() const {
    std::string s;
    s += digits.substr(0, 1);
    if (digits.size() > 1) {
        s += '.';
        s += digits.substr(1);
    }
    s += 'e';
    s += std::to_string(exponent10);
    return s;
}

SciApprox sci_round(const BigCount& x, int sig_digits) {
    if (x.is_zero()) throw std::domain_error("sci_round: zero has no scientific form");
    if (sig_digits < 1) throw std::domain_error("sci_round: sig_digits must be >= 1");

    const std::string dec = x.to_decimal();
    const auto sig = static_cast<std::size_t>(sig_digits);
    std::int64_t exp10 = static_cast<std::int64_t>(dec.size()) - 1;

    std::string digits;
    if (sig >= dec.size()) {
        digits = dec + std::string(sig - dec.size(), '0');
    } else {
        digits = dec.substr(0, sig);
        const std::string_view tail = std::string_view(dec).substr(sig);
        bool round_up;
        if (tail[0] > '5') {
            round_up = true;
        } else if (tail[0] < '5') {
            round_up = false;
        } else {
            // exactly half iff the rest of the tail is all zeros
            const bool rest_nonzero = tail.find_first_not_of('0', 1) != std::string_view::npos;
            round_up = rest_nonzero || ((digits.back() - '0') % 2 == 1);
        }
        if (round_up) {
            auto i = static_cast<std::ptrdiff_t>(digits.size()) - 1;
            while (i >= 0 && digits[static_cast<std::size_t>(i)] == '9')
                digits[static_cast<std::size_t>(i--)] = '0';
            if (i < 0) {
                // 999... carried over; keep sig digits, bump the exponent
                digits.insert(digits.begin(), '1');
                digits.pop_back();
                ++exp10;
            } else {
                ++digits[static_cast<std::size_t>(i)];
            }
        }
    }

    SciApprox out;
    out.digits = std::move(digits);
    out.exponent10 = exp10;
    std::string m = out.digits.substr(0, 1);
    m += '.';
    m += out.digits.size() > 1 ? out.digits.substr(1) : "0";
    out.mantissa = std::stod(m);
    return out;
}

}  // namespace sumdiff
