#include "seqc/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "seqc/kernels.hpp"

namespace seqc {

Poly::Poly(PrimeField field, std::vector<FieldElem> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (FieldElem c : coeffs_) {
        if (!field_.contains(c)) {
            throw std::invalid_argument("coefficient " + std::to_string(c) + " not in F_" +
                                        std::to_string(field_.p()));
        }
    }
    normalize();
}

Poly Poly::constant(PrimeField field, FieldElem c) { return Poly(field, std::vector<FieldElem>{c}); }

Poly Poly::monomial(PrimeField field, FieldElem c, std::size_t exponent) {
    std::vector<FieldElem> v(exponent + 1, 0);
    v[exponent] = c;
    return Poly(field, std::move(v));
}

Poly Poly::linear(PrimeField field, FieldElem c) { return Poly(field, {c, 1}); }

Poly Poly::from_ints(PrimeField field, std::initializer_list<std::int64_t> coeffs) {
    std::vector<FieldElem> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs) v.push_back(field.from_int(c));
    return Poly(field, std::move(v));
}

void Poly::normalize() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Valuation Poly::degree() const noexcept {
    return coeffs_.empty() ? Valuation::neg_inf() : Valuation(static_cast<std::int64_t>(coeffs_.size()) - 1);
}

FieldElem Poly::evaluate(FieldElem x) const noexcept {
    FieldElem acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * field_.inv(leading());
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    Poly out(field_);
    out.coeffs_.assign(k, 0);
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

Poly Poly::truncated(std::size_t n) const {
    Poly out(field_);
    out.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(n, coeffs_.size())));
    out.normalize();
    return out;
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& c : out.coeffs_) c = field_.neg(c);
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_field(field_, rhs.field_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], rhs.coeffs_[i]);
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_field(field_, rhs.field_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], rhs.coeffs_[i]);
    normalize();
    return *this;
}

Poly& Poly::operator*=(FieldElem c) {
    if (!field_.contains(c)) throw std::invalid_argument("scalar not in field");
    for (auto& x : coeffs_) x = field_.mul(x, c);
    normalize();
    return *this;
}

namespace {

// Schoolbook product limited to the first `limit` coefficients, one kernel
// axpy per nonzero coefficient of the shorter operand.
std::vector<FieldElem> product_coeffs(std::span<const FieldElem> a, std::span<const FieldElem> b,
                                      std::size_t limit, std::uint32_t p) {
    if (a.empty() || b.empty() || limit == 0) return {};
    if (a.size() > b.size()) std::swap(a, b);
    const std::size_t len = std::min(limit, a.size() + b.size() - 1);
    std::vector<FieldElem> out(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        const std::size_t n = std::min(b.size(), len - i);
        kernels::axpy_mod(std::span(out).subspan(i, n), b.first(n), a[i], p);
    }
    return out;
}

} // namespace

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    Poly out(a.field_);
    out.coeffs_ = product_coeffs(a.coeffs_, b.coeffs_, a.coeffs_.size() + b.coeffs_.size(), a.field_.p());
    out.normalize();
    return out;
}

Poly mul_trunc(const Poly& a, const Poly& b, std::size_t n) {
    require_same_field(a.field(), b.field());
    return Poly(a.field(), product_coeffs(a.coeffs(), b.coeffs(), n, a.field().p()));
}

Poly pow_mod_tN(const Poly& a, std::uint64_t e, std::size_t n) {
    if (n == 0) throw std::invalid_argument("pow_mod_tN: precision must be >= 1");
    Poly result = Poly::constant(a.field(), 1);
    Poly base = a.truncated(n);
    while (e != 0) {
        if (e & 1) result = mul_trunc(result, base, n);
        e >>= 1;
        if (e != 0) base = mul_trunc(base, base, n);
    }
    return result;
}

Poly pow(const Poly& a, std::uint64_t e) {
    Poly result = Poly::constant(a.field(), 1);
    Poly base = a;
    while (e != 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

DivMod divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const PrimeField& f = a.field();
    if (a.size() < b.size()) return {Poly(f), a};
    std::vector<FieldElem> rem(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = b.size() - 1;
    std::vector<FieldElem> quot(a.size() - db, 0);
    const FieldElem lead_inv = f.inv(b.leading());
    for (std::size_t i = a.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        const FieldElem c = f.mul(rem[i], lead_inv);
        quot[i - db] = c;
        kernels::axpy_mod(std::span(rem).subspan(i - db, db + 1), b.coeffs(), f.neg(c), f.p());
    }
    rem.resize(db);
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::string Poly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const FieldElem c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::string Poly::to_digits() const {
    if (field_.p() > 36) throw std::invalid_argument("digit strings need p <= 36");
    static constexpr char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
    if (coeffs_.empty()) return "0";
    std::string out;
    out.reserve(coeffs_.size());
    for (FieldElem c : coeffs_) out.push_back(digits[c]);
    return out;
}

} // namespace seqc
