#include "seqc/contfrac.hpp"

#include <algorithm>
#include <stdexcept>

#include "seqc/gf2poly.hpp"

namespace seqc {
namespace {

// x^P R restricted to its known coefficients, as a polynomial in x.
Poly scaled_numerator(const LaurentSeries& r) {
    const std::int64_t P = r.precision();
    const std::int64_t top = r.valuation().value();
    auto c = r.coeffs();
    std::vector<FieldElem> low(static_cast<std::size_t>(top + P + 1), 0);
    for (std::size_t i = 0; i < c.size(); ++i) low[static_cast<std::size_t>(top + P) - i] = c[i];
    return Poly(r.field(), std::move(low));
}

// Appends A to the expansion if its degree is still determined; false once it is not.
bool accept(CFExpansion& cf, Poly a) {
    if (cf.quotients.empty()) {
        cf.quotients.push_back(std::move(a));
        cf.q_degrees.push_back(0);
        return true;
    }
    const std::int64_t prev = cf.q_degrees.back();
    const std::int64_t next = prev + a.degree_or_minus_one();
    if (prev + next > cf.precision) return false;
    cf.quotients.push_back(std::move(a));
    cf.q_degrees.push_back(next);
    return true;
}

void euclid_generic(CFExpansion& cf, Poly a, Poly b) {
    for (;;) {
        DivMod qr = divmod(a, b);
        if (!accept(cf, std::move(qr.quotient))) return;
        if (qr.remainder.is_zero()) {
            cf.terminated = true;
            return;
        }
        a = std::move(b);
        b = std::move(qr.remainder);
    }
}

void euclid_gf2(CFExpansion& cf, Gf2Poly a, Gf2Poly b) {
    for (;;) {
        Gf2Poly q = a.reduce_by(b);
        if (!accept(cf, q.to_poly())) return;
        if (a.is_zero()) {
            cf.terminated = true;
            return;
        }
        std::swap(a, b);
    }
}

} // namespace

CFExpansion cf_expand(const LaurentSeries& r) {
    if (r.is_zero()) throw std::domain_error("continued fraction of a zero series");
    if (r.precision() < 0) throw std::domain_error("continued fraction needs the coefficient of x^0");
    CFExpansion cf{r.field(), r.precision(), {}, {}, 0, false};
    const Poly g = scaled_numerator(r);
    const auto P = static_cast<std::size_t>(r.precision());
    if (r.field().is_binary()) {
        euclid_gf2(cf, Gf2Poly::from_poly(g), Gf2Poly::monomial(P));
    } else {
        euclid_generic(cf, g, Poly::monomial(r.field(), 1, P));
    }
    for (std::size_t j = 0; j < cf.q_degrees.size() && 2 * cf.q_degrees[j] <= cf.precision; ++j) cf.reliable_count = j;
    return cf;
}

std::vector<Poly> cf_expand_by_inversion(const LaurentSeries& r) {
    if (r.is_zero()) throw std::domain_error("continued fraction of a zero series");
    std::vector<Poly> out;
    out.push_back(polynomial_part(r));
    LaurentSeries b = r - LaurentSeries::from_poly(out.back(), r.precision());
    while (!b.is_zero()) {
        LaurentSeries inv = series_inverse(b);
        if (inv.precision() < 0) break;
        out.push_back(polynomial_part(inv));
        b = inv - LaurentSeries::from_poly(out.back(), inv.precision());
    }
    return out;
}

std::vector<Convergent> convergents(const CFExpansion& cf, std::optional<std::size_t> count) {
    const std::size_t n = std::min(count.value_or(cf.quotients.size()), cf.quotients.size());
    std::vector<Convergent> out;
    if (n == 0) return out;
    out.reserve(n);
    const Poly one = Poly::constant(cf.field, 1);
    Poly p_prev = one, q_prev = Poly::zero(cf.field);
    out.push_back({cf.quotients[0], one});
    for (std::size_t j = 1; j < n; ++j) {
        const Convergent& last = out.back();
        Poly p = cf.quotients[j] * last.p + p_prev;
        Poly q = cf.quotients[j] * last.q + q_prev;
        p_prev = last.p;
        q_prev = last.q;
        out.push_back({std::move(p), std::move(q)});
    }
    return out;
}

Profile profile_from_cf(const LaurentSeries& r, std::size_t n_max) {
    const auto need = static_cast<std::int64_t>(n_max);
    if (r.precision() < need) {
        throw std::domain_error("series known to " + std::to_string(r.precision()) + " coefficients, profile needs " +
                                std::to_string(n_max));
    }
    Profile out;
    out.values.assign(n_max, 0);
    const LaurentSeries rt = r.truncated(need);
    if (rt.is_zero()) return out;
    const CFExpansion cf = cf_expand(rt);
    std::size_t j = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto nn = static_cast<std::int64_t>(n);
        while (j + 1 < cf.q_degrees.size() && cf.q_degrees[j] + cf.q_degrees[j + 1] <= nn) ++j;
        out.values[n - 1] = static_cast<std::size_t>(cf.q_degrees[j]);
    }
    return out;
}

namespace {

// U^{2^k} known down to x^{-precision}, by repeated squaring.
LaurentSeries u_power(const PrimeField& f, std::uint32_t k, std::int64_t precision) {
    LaurentSeries u = LaurentSeries::geometric(f, precision);
    for (std::uint32_t i = 0; i < k; ++i) u = u * u;
    return u;
}

void check_pattern_length(std::uint32_t k) {
    if (k == 0 || k > 20) throw std::invalid_argument("pattern length out of range");
}

PeriodicityCheck reconstruct(const Poly& q, std::uint32_t k, const LaurentSeries& u_pow) {
    const PrimeField& f = q.field();
    const std::int64_t period = std::int64_t{1} << k;
    const std::int64_t span = 3 * period;
    const std::int64_t need = std::max<std::int64_t>(q.degree_or_minus_one(), 0) + span;
    const LaurentSeries prod = LaurentSeries::from_poly(q, need) * u_pow.truncated(need);

    PeriodicityCheck out{true, Poly(f), Poly(f)};
    std::vector<FieldElem> b(static_cast<std::size_t>(span));
    for (std::int64_t i = 0; i < span; ++i) b[static_cast<std::size_t>(i)] = prod.coeff(-i);
    for (std::int64_t i = 0; i + period < span; ++i) {
        if (b[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i + period)]) out.periodic = false;
    }
    std::vector<FieldElem> rc(static_cast<std::size_t>(period), 0);
    for (std::int64_t i = 1; i <= period; ++i) rc[static_cast<std::size_t>(period - i)] = b[static_cast<std::size_t>(i)];
    out.reconstructed = Poly(f, std::move(rc));
    const Poly modulus = Poly::monomial(f, 1, static_cast<std::size_t>(period)) - Poly::constant(f, 1);
    out.expected = divmod(q, modulus).remainder;
    return out;
}

} // namespace

PeriodicityCheck q_times_u_power_reconstruction(const Poly& q, std::uint32_t k) {
    check_pattern_length(k);
    const std::int64_t need = std::max<std::int64_t>(q.degree_or_minus_one(), 0) + 3 * (std::int64_t{1} << k);
    return reconstruct(q, k, u_power(q.field(), k, need));
}

CongruenceReport q_congruences(const CFExpansion& cf, std::uint32_t k) {
    if (!cf.field.is_binary()) throw std::invalid_argument("q_congruences applies to binary expansions");
    check_pattern_length(k);
    const PrimeField& f = cf.field;
    const Poly one = Poly::constant(f, 1);
    const Poly x_plus_1 = Poly::linear(f, 1);
    const Poly modulus = k == 1 ? x_plus_1 : Poly::monomial(f, 1, std::size_t{1} << (k - 1)) + one;

    CongruenceReport rep;
    const auto conv = convergents(cf, cf.reliable_count + 1);
    std::int64_t top = 0;
    for (const auto& c : conv) top = std::max(top, c.q.degree_or_minus_one());
    const LaurentSeries u_pow = u_power(f, k, top + 3 * (std::int64_t{1} << k));
    for (std::size_t j = 0; j < conv.size(); ++j) {
        const Poly& q = conv[j].q;
        const Poly want = (k == 1 || j % 2 == 0) ? one : x_plus_1;
        const Poly got = divmod(q, modulus).remainder;
        ++rep.checked;
        if (got != want) {
            rep.first_failure = j;
            rep.detail = "Q_" + std::to_string(j) + " mod " + modulus.to_string() + " = " + got.to_string() +
                         ", expected " + want.to_string();
            return rep;
        }
        const PeriodicityCheck pc = reconstruct(q, k, u_pow);
        if (!pc.periodic || pc.reconstructed != pc.expected) {
            rep.first_failure = j;
            rep.detail = "Q_" + std::to_string(j) + " U^" + std::to_string(1u << k) +
                         (pc.periodic ? " reconstructs " + pc.reconstructed.to_string() : std::string(" is not periodic"));
            return rep;
        }
    }
    return rep;
}

LaurentSeries all_ones_functional_residual(const LaurentSeries& r, std::uint32_t k) {
    if (!r.field().is_binary()) throw std::invalid_argument("functional equation is stated over F_2");
    check_pattern_length(k);
    const PrimeField& f = r.field();
    const std::int64_t period = std::int64_t{1} << k;
    const std::int64_t wide = r.precision() + 2 * period + 8;
    const LaurentSeries tail = u_power(f, k, wide) * LaurentSeries::monomial(f, -period, wide);
    const LaurentSeries one_plus_x = LaurentSeries::from_poly(Poly::linear(f, 1), wide);
    return one_plus_x * (r * r) + r + tail;
}

} // namespace seqc
