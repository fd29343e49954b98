#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seqc/field.hpp"
#include "seqc/poly.hpp"

namespace seqc {

/// Truncated formal Laurent series in x^{-1} over F_p:
///
///     R = sum_{e <= m} r_e x^e  (+ unknown terms below x^{-precision})
///
/// The coefficient of x^e is known for every e >= -precision and nothing is
/// known below. A nonzero series is normalized so its top stored coefficient
/// (at exponent m = valuation) is nonzero. A zero series means "zero as far as
/// is known" and still carries its precision.
class LaurentSeries {
public:
    static LaurentSeries zero(PrimeField field, std::int64_t precision);
    /// coeffs[i] is the coefficient of x^{top - i}; stored coefficients run
    /// down to x^{-precision}. Leading zeros are stripped.
    static LaurentSeries from_coeffs(PrimeField field, std::int64_t top, std::vector<FieldElem> coeffs,
                                     std::int64_t precision);
    /// An exact polynomial viewed as a series known down to x^{-precision}.
    static LaurentSeries from_poly(const Poly& p, std::int64_t precision);
    /// x^e, known down to x^{-precision}.
    static LaurentSeries monomial(PrimeField field, std::int64_t e, std::int64_t precision);
    /// U = sum_{i>=0} x^{-i}, known down to x^{-precision}.
    static LaurentSeries geometric(PrimeField field, std::int64_t precision);

    const PrimeField& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Valuation valuation() const noexcept;
    /// Lowest exponent with known coefficient is -precision().
    std::int64_t precision() const noexcept { return precision_; }
    /// Number of known coefficients counted from the leading term (0 for zero).
    std::size_t relative_precision() const noexcept { return coeffs_.size(); }
    /// Coefficient of x^e; throws std::out_of_range when e < -precision.
    FieldElem coeff(std::int64_t e) const;
    /// Known coefficients from the leading term downwards.
    std::span<const FieldElem> coeffs() const noexcept { return coeffs_; }

    /// Forget everything below x^{-new_precision} (new_precision <= precision()).
    LaurentSeries truncated(std::int64_t new_precision) const;

    std::string to_string() const;

    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

private:
    LaurentSeries(PrimeField field, std::int64_t top, std::vector<FieldElem> coeffs, std::int64_t precision);

    PrimeField field_;
    std::int64_t top_ = 0;  // meaningful only when nonzero
    std::vector<FieldElem> coeffs_;
    std::int64_t precision_ = 0;
};

/// R = sum_{i=1}^{N} u_{i-1} x^{-i}, precision N.
LaurentSeries series_from_prefix(std::span<const FieldElem> prefix, PrimeField field);

Valuation valuation(const LaurentSeries& r) noexcept;
LaurentSeries series_add(const LaurentSeries& r, const LaurentSeries& s);
LaurentSeries series_sub(const LaurentSeries& r, const LaurentSeries& s);
LaurentSeries series_neg(const LaurentSeries& r);
LaurentSeries series_mul(const LaurentSeries& r, const LaurentSeries& s);
LaurentSeries series_scale(const LaurentSeries& r, FieldElem c);
/// Throws std::domain_error for a zero series.
LaurentSeries series_inverse(const LaurentSeries& r);
/// Sum of the terms with nonnegative exponent, as a polynomial in x.
/// Throws std::domain_error if the coefficient of x^0 is not known.
Poly polynomial_part(const LaurentSeries& r);

inline LaurentSeries operator+(const LaurentSeries& r, const LaurentSeries& s) { return series_add(r, s); }
inline LaurentSeries operator-(const LaurentSeries& r, const LaurentSeries& s) { return series_sub(r, s); }
inline LaurentSeries operator*(const LaurentSeries& r, const LaurentSeries& s) { return series_mul(r, s); }

} // namespace seqc
