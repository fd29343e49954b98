#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqc/field.hpp"

namespace seqc {

/// Dense univariate polynomial over F_p, coefficients stored low to high.
/// Canonical form: no trailing zero coefficients; the zero polynomial has
/// no coefficients and degree -infinity.
class Poly {
public:
    explicit Poly(PrimeField field) : field_(field) {}
    /// Coefficients must already be canonical residues (throws otherwise).
    Poly(PrimeField field, std::vector<FieldElem> coeffs);
    Poly(PrimeField field, std::initializer_list<FieldElem> coeffs)
        : Poly(field, std::vector<FieldElem>(coeffs)) {}

    static Poly zero(PrimeField field) { return Poly(field); }
    static Poly constant(PrimeField field, FieldElem c);
    static Poly monomial(PrimeField field, FieldElem c, std::size_t exponent);
    /// x + c
    static Poly linear(PrimeField field, FieldElem c);
    /// Reduces arbitrary signed integers into the field.
    static Poly from_ints(PrimeField field, std::initializer_list<std::int64_t> coeffs);

    const PrimeField& field() const noexcept { return field_; }
    std::span<const FieldElem> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Valuation degree() const noexcept;
    /// Degree as an integer, -1 for the zero polynomial.
    std::int64_t degree_or_minus_one() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    FieldElem leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    FieldElem operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    FieldElem evaluate(FieldElem x) const noexcept;
    Poly monic() const;
    /// Multiply by x^k.
    Poly shifted(std::size_t k) const;
    /// Reduce modulo t^n.
    Poly truncated(std::size_t n) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(FieldElem c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, FieldElem c) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    /// Human-readable form, e.g. "x^2 + 2*x + 1". `var` names the indeterminate.
    std::string to_string(std::string_view var = "x") const;
    /// Low-to-high coefficient digits ("111" for x^2+x+1); p must be <= 36.
    std::string to_digits() const;

private:
    void normalize() noexcept;

    PrimeField field_;
    std::vector<FieldElem> coeffs_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// a = q*b + r with deg r < deg b. Throws std::domain_error if b is zero.
DivMod divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// a*b mod t^n.
Poly mul_trunc(const Poly& a, const Poly& b, std::size_t n);
/// a^e mod t^n by square-and-multiply, truncating after every product. n >= 1.
Poly pow_mod_tN(const Poly& a, std::uint64_t e, std::size_t n);
/// a^e without truncation.
Poly pow(const Poly& a, std::uint64_t e);

} // namespace seqc
