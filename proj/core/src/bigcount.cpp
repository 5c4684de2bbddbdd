#include "sumdiff/bigcount.hpp"

#include <stdexcept>
#include <utility>

namespace sumdiff {

BigCount::BigCount(mpz_class v) : v_(std::move(v)) {
    if (sgn(v_) < 0) throw std::domain_error("BigCount: negative value");
}

BigCount BigCount::from_decimal(const std::string& s) {
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0)
        throw std::invalid_argument("BigCount: not a decimal integer: \"" + s + "\"");
    return BigCount(std::move(v));
}

std::size_t BigCount::bit_length() const {
    if (is_zero()) return 0;
    return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

std::size_t BigCount::digits10() const {
    // mpz_sizeinbase may overestimate non-power-of-two bases by one
    std::size_t n = mpz_sizeinbase(v_.get_mpz_t(), 10);
    if (n <= 1) return 1;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(n - 1));
    return v_ < p10 ? n - 1 : n;
}

std::uint64_t BigCount::to_u64() const {
    if (!v_.fits_ulong_p()) throw std::overflow_error("BigCount: value exceeds 64 bits");
    return static_cast<std::uint64_t>(v_.get_ui());
}

}  // namespace sumdiff
