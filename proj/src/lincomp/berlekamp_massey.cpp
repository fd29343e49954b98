#include "seqc/lincomp.hpp"

#include <algorithm>
#include <stdexcept>

#include "seqc/kernels.hpp"

namespace seqc {
namespace {

struct Synthesis {
    Profile profile;
    std::vector<FieldElem> connection;  // C_0 = 1, ..., C_L
    std::size_t length = 0;
};

void check_symbols(std::span<const FieldElem> prefix, const PrimeField& field) {
    if (prefix.empty()) throw std::invalid_argument("Berlekamp-Massey needs a nonempty prefix");
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (!field.contains(prefix[i])) {
            throw std::invalid_argument("symbol " + std::to_string(prefix[i]) + " at index " + std::to_string(i) +
                                        " not in F_" + std::to_string(field.p()));
        }
    }
}

// Massey's synthesis over F_p. Discrepancies are dot products against the
// reversed prefix; connection updates are axpy calls.
Synthesis synthesize_fp(std::span<const FieldElem> s, const PrimeField& field) {
    const std::size_t n_total = s.size();
    const std::uint32_t p = field.p();
    std::vector<FieldElem> rev(s.rbegin(), s.rend());
    const std::size_t cap = 2 * n_total + 2;
    std::vector<FieldElem> c(cap, 0), b(cap, 0), tmp(cap, 0);
    c[0] = b[0] = 1;
    std::size_t len = 0, len_b = 0, gap = 1;
    FieldElem last_disc = 1;

    Synthesis out;
    out.profile.values.resize(n_total);
    for (std::size_t n = 0; n < n_total; ++n) {
        const std::span<const FieldElem> window(rev.data() + (n_total - 1 - n), len + 1);
        const FieldElem d = kernels::dot_mod(std::span<const FieldElem>(c.data(), len + 1), window, p);
        if (d == 0) {
            ++gap;
        } else {
            const FieldElem coef = field.neg(field.mul(d, field.inv(last_disc)));
            if (2 * len <= n) {
                const std::size_t keep = std::max(len, gap + len_b) + 1;
                std::copy_n(c.begin(), keep, tmp.begin());
                kernels::axpy_mod(std::span(c).subspan(gap, len_b + 1), std::span<const FieldElem>(b.data(), len_b + 1),
                                  coef, p);
                std::swap(b, tmp);
                len_b = len;
                len = n + 1 - len;
                last_disc = d;
                gap = 1;
            } else {
                kernels::axpy_mod(std::span(c).subspan(gap, len_b + 1), std::span<const FieldElem>(b.data(), len_b + 1),
                                  coef, p);
                ++gap;
            }
        }
        out.profile.values[n] = len;
    }
    out.length = len;
    out.connection.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(len + 1));
    return out;
}

std::size_t words_for(std::size_t bits) { return bits / 64 + 1; }

// Same recursion over F_2 with 64 coefficients per word: the discrepancy is
// the parity of (C & window) and an update is C ^= B << gap.
Synthesis synthesize_gf2(std::span<const FieldElem> s) {
    const std::size_t n_total = s.size();
    std::vector<std::uint64_t> rev(n_total / 64 + 4, 0);
    for (std::size_t j = 0; j < n_total; ++j) {
        if (s[n_total - 1 - j] != 0) rev[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    const std::size_t cap = (2 * n_total + 2) / 64 + 4;
    std::vector<std::uint64_t> c(cap, 0), b(cap, 0), tmp(cap, 0);
    c[0] = b[0] = 1;
    std::size_t len = 0, len_b = 0, gap = 1;

    Synthesis out;
    out.profile.values.resize(n_total);
    for (std::size_t n = 0; n < n_total; ++n) {
        const bool d = kernels::and_parity(std::span<const std::uint64_t>(c.data(), words_for(len)), rev,
                                           n_total - 1 - n);
        if (!d) {
            ++gap;
        } else if (2 * len <= n) {
            const std::size_t keep = words_for(std::max(len, gap + len_b));
            std::copy_n(c.begin(), keep, tmp.begin());
            kernels::xor_shifted(c, std::span<const std::uint64_t>(b.data(), words_for(len_b)), gap);
            std::swap(b, tmp);
            len_b = len;
            len = n + 1 - len;
            gap = 1;
        } else {
            kernels::xor_shifted(c, std::span<const std::uint64_t>(b.data(), words_for(len_b)), gap);
            ++gap;
        }
        out.profile.values[n] = len;
    }
    out.length = len;
    out.connection.resize(len + 1);
    for (std::size_t i = 0; i <= len; ++i) out.connection[i] = (c[i / 64] >> (i % 64)) & 1u;
    return out;
}

Synthesis synthesize(std::span<const FieldElem> prefix, const PrimeField& field) {
    check_symbols(prefix, field);
    return field.is_binary() ? synthesize_gf2(prefix) : synthesize_fp(prefix, field);
}

} // namespace

Profile bm_profile(std::span<const FieldElem> prefix, const PrimeField& field) {
    return synthesize(prefix, field).profile;
}

Recurrence bm_connection(std::span<const FieldElem> prefix, const PrimeField& field) {
    Synthesis syn = synthesize(prefix, field);
    Recurrence rec;
    rec.length = syn.length;
    rec.coeffs.assign(syn.length, 0);
    // sum_{i=0}^{L} C_i u_{n-i} = 0  =>  u_{n} = -sum_{i=1}^{L} C_i u_{n-i}
    for (std::size_t i = 1; i <= syn.length; ++i) rec.coeffs[syn.length - i] = field.neg(syn.connection[i]);
    return rec;
}

std::vector<FieldElem> Recurrence::replay(std::span<const FieldElem> seed, std::size_t n,
                                          const PrimeField& field) const {
    if (seed.size() < length) throw std::invalid_argument("replay: seed shorter than recurrence length");
    std::vector<FieldElem> out(seed.begin(), seed.begin() + static_cast<std::ptrdiff_t>(std::min(n, length)));
    out.reserve(n);
    while (out.size() < n) {
        const std::size_t t = out.size();
        FieldElem v = 0;
        for (std::size_t i = 0; i < length; ++i) v = field.add(v, field.mul(coeffs[i], out[t - length + i]));
        out.push_back(v);
    }
    return out;
}

} // namespace seqc
