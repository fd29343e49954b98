#include "seqc/laurent.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "seqc/kernels.hpp"

namespace seqc {

LaurentSeries::LaurentSeries(PrimeField field, std::int64_t top, std::vector<FieldElem> coeffs,
                             std::int64_t precision)
    : field_(field), top_(top), coeffs_(std::move(coeffs)), precision_(precision) {
    // Keep exactly the coefficients of x^top .. x^{-precision}.
    const std::int64_t known = top_ + precision_ + 1;
    if (known <= 0) {
        coeffs_.clear();
    } else {
        coeffs_.resize(static_cast<std::size_t>(known), 0);
    }
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](FieldElem c) { return c != 0; });
    top_ -= first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty()) top_ = 0;
}

LaurentSeries LaurentSeries::zero(PrimeField field, std::int64_t precision) {
    return LaurentSeries(field, 0, {}, precision);
}

LaurentSeries LaurentSeries::from_coeffs(PrimeField field, std::int64_t top, std::vector<FieldElem> coeffs,
                                         std::int64_t precision) {
    for (FieldElem c : coeffs) {
        if (!field.contains(c)) throw std::invalid_argument("series coefficient not in field");
    }
    return LaurentSeries(field, top, std::move(coeffs), precision);
}

LaurentSeries LaurentSeries::from_poly(const Poly& p, std::int64_t precision) {
    if (p.is_zero()) return zero(p.field(), precision);
    const std::int64_t deg = p.degree().value();
    std::vector<FieldElem> c;
    c.reserve(p.size());
    for (std::int64_t e = deg; e >= 0; --e) c.push_back(p[static_cast<std::size_t>(e)]);
    return LaurentSeries(p.field(), deg, std::move(c), precision);
}

LaurentSeries LaurentSeries::monomial(PrimeField field, std::int64_t e, std::int64_t precision) {
    return LaurentSeries(field, e, {1}, precision);
}

LaurentSeries LaurentSeries::geometric(PrimeField field, std::int64_t precision) {
    if (precision < 0) throw std::invalid_argument("geometric series needs precision >= 0");
    return LaurentSeries(field, 0, std::vector<FieldElem>(static_cast<std::size_t>(precision) + 1, 1), precision);
}

Valuation LaurentSeries::valuation() const noexcept {
    return is_zero() ? Valuation::neg_inf() : Valuation(top_);
}

FieldElem LaurentSeries::coeff(std::int64_t e) const {
    if (e < -precision_) {
        throw std::out_of_range("coefficient of x^" + std::to_string(e) + " below known precision");
    }
    if (is_zero() || e > top_) return 0;
    return coeffs_[static_cast<std::size_t>(top_ - e)];
}

LaurentSeries LaurentSeries::truncated(std::int64_t new_precision) const {
    if (new_precision > precision_) throw std::invalid_argument("cannot raise series precision");
    return LaurentSeries(field_, top_, coeffs_, new_precision);
}

std::string LaurentSeries::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        const std::int64_t e = top_ - static_cast<std::int64_t>(i);
        if (coeffs_[i] != 1 || e == 0) out += std::to_string(coeffs_[i]);
        if (e != 0) {
            if (coeffs_[i] != 1) out += "*";
            out += e == 1 ? "x" : "x^" + std::to_string(e);
        }
    }
    if (out.empty()) out = "0";
    return out + " + O(x^" + std::to_string(-precision_ - 1) + ")";
}

LaurentSeries series_from_prefix(std::span<const FieldElem> prefix, PrimeField field) {
    if (prefix.empty()) throw std::invalid_argument("series_from_prefix: empty prefix");
    std::vector<FieldElem> c(prefix.begin(), prefix.end());
    for (FieldElem v : c) {
        if (!field.contains(v)) throw std::invalid_argument("prefix symbol " + std::to_string(v) + " not in field");
    }
    return LaurentSeries::from_coeffs(field, -1, std::move(c), static_cast<std::int64_t>(prefix.size()));
}

Valuation valuation(const LaurentSeries& r) noexcept { return r.valuation(); }

namespace {

LaurentSeries combine(const LaurentSeries& r, const LaurentSeries& s, bool subtract) {
    require_same_field(r.field(), s.field());
    const PrimeField& f = r.field();
    const std::int64_t precision = std::min(r.precision(), s.precision());
    if (r.is_zero() && s.is_zero()) return LaurentSeries::zero(f, precision);
    std::int64_t top = std::numeric_limits<std::int64_t>::min();
    if (!r.is_zero()) top = r.valuation().value();
    if (!s.is_zero()) top = std::max(top, s.valuation().value());
    if (top < -precision) return LaurentSeries::zero(f, precision);
    std::vector<FieldElem> c(static_cast<std::size_t>(top + precision + 1));
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::int64_t e = top - static_cast<std::int64_t>(i);
        const FieldElem b = s.coeff(e);
        c[i] = subtract ? f.sub(r.coeff(e), b) : f.add(r.coeff(e), b);
    }
    return LaurentSeries::from_coeffs(f, top, std::move(c), precision);
}

} // namespace

LaurentSeries series_add(const LaurentSeries& r, const LaurentSeries& s) { return combine(r, s, false); }
LaurentSeries series_sub(const LaurentSeries& r, const LaurentSeries& s) { return combine(r, s, true); }

LaurentSeries series_neg(const LaurentSeries& r) { return series_scale(r, r.field().neg(1)); }

LaurentSeries series_scale(const LaurentSeries& r, FieldElem c) {
    const PrimeField& f = r.field();
    if (!f.contains(c)) throw std::invalid_argument("scalar not in field");
    if (r.is_zero()) return r;
    std::vector<FieldElem> out(r.coeffs().begin(), r.coeffs().end());
    for (auto& x : out) x = f.mul(x, c);
    return LaurentSeries::from_coeffs(f, r.valuation().value(), std::move(out), r.precision());
}

LaurentSeries series_mul(const LaurentSeries& r, const LaurentSeries& s) {
    require_same_field(r.field(), s.field());
    const PrimeField& f = r.field();
    // With R = r + O(x^{-Pr-1}) and S = s + O(x^{-Ps-1}) the product error
    // is O(x^{max(v(R)-Ps, v(S)-Pr)-1}).
    if (r.is_zero() && s.is_zero()) return LaurentSeries::zero(f, r.precision() + s.precision() + 1);
    if (r.is_zero()) return LaurentSeries::zero(f, r.precision() - s.valuation().value());
    if (s.is_zero()) return LaurentSeries::zero(f, s.precision() - r.valuation().value());
    const std::int64_t vr = r.valuation().value();
    const std::int64_t vs = s.valuation().value();
    const std::int64_t precision = std::min(s.precision() - vr, r.precision() - vs);
    const std::size_t len = std::min(r.relative_precision(), s.relative_precision());
    auto a = r.coeffs();
    auto b = s.coeffs();
    std::vector<FieldElem> out(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        if (a[i] == 0) continue;
        kernels::axpy_mod(std::span(out).subspan(i), b.first(len - i), a[i], f.p());
    }
    return LaurentSeries::from_coeffs(f, vr + vs, std::move(out), precision);
}

LaurentSeries series_inverse(const LaurentSeries& r) {
    if (r.is_zero()) throw std::domain_error("inverse of a zero series");
    const PrimeField& f = r.field();
    const std::int64_t m = r.valuation().value();
    auto a = r.coeffs();
    const std::size_t k = a.size();
    // Normalize by the leading coefficient, then z_n = -c^{-1} sum_{i=1}^{n} a_i z_{n-i}.
    const FieldElem lead_inv = f.inv(a[0]);
    const FieldElem neg_lead_inv = f.neg(lead_inv);
    // z is kept reversed so each step is one contiguous dot product.
    std::vector<FieldElem> zrev(k, 0);
    zrev[k - 1] = lead_inv;
    for (std::size_t n = 1; n < k; ++n) {
        const FieldElem s = kernels::dot_mod(a.subspan(1, n), std::span<const FieldElem>(zrev).subspan(k - n, n), f.p());
        zrev[k - 1 - n] = f.mul(neg_lead_inv, s);
    }
    std::reverse(zrev.begin(), zrev.end());
    return LaurentSeries::from_coeffs(f, -m, std::move(zrev), 2 * m + r.precision());
}

Poly polynomial_part(const LaurentSeries& r) {
    if (r.precision() < 0) throw std::domain_error("polynomial part not determined at this precision");
    if (r.is_zero() || r.valuation().value() < 0) return Poly(r.field());
    const std::int64_t top = r.valuation().value();
    std::vector<FieldElem> c(static_cast<std::size_t>(top + 1));
    for (std::int64_t e = 0; e <= top; ++e) c[static_cast<std::size_t>(e)] = r.coeff(e);
    return Poly(r.field(), std::move(c));
}

} // namespace seqc
