#include "seqc/field.hpp"

#include <stdexcept>

namespace seqc {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    // Supported moduli stay below 2^31, so trial division tops out near 46341.
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
    if (p < 2 || p > max_modulus) {
        throw std::invalid_argument("field modulus " + std::to_string(p) + " outside [2, 2^31-1]");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    }
    p_ = static_cast<std::uint32_t>(p);
}

FieldElem PrimeField::pow(FieldElem a, std::uint64_t e) const noexcept {
    FieldElem result = 1 % p_;
    FieldElem base = a;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElem PrimeField::inv(FieldElem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

FieldElem PrimeField::from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<FieldElem>(r);
}

void require_same_field(const PrimeField& a, const PrimeField& b) {
    if (!(a == b)) {
        throw std::invalid_argument("field mismatch: F_" + std::to_string(a.p()) + " vs F_" +
                                    std::to_string(b.p()));
    }
}

std::int64_t Valuation::value() const {
    if (!finite_) throw std::logic_error("valuation is -infinity");
    return value_;
}

std::string Valuation::to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

} // namespace seqc
