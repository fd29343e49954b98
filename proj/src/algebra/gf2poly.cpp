#include "seqc/gf2poly.hpp"

#include <bit>
#include <stdexcept>

#include "seqc/kernels.hpp"

namespace seqc {

Gf2Poly Gf2Poly::from_bits(const std::vector<FieldElem>& bits) {
    Gf2Poly out;
    out.words_.assign(bits.size() / 64 + 2, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) throw std::invalid_argument("Gf2Poly: coefficient outside F_2");
        if (bits[i] != 0) out.words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    out.recompute_degree(static_cast<std::int64_t>(bits.size()) - 1);
    return out;
}

Gf2Poly Gf2Poly::from_poly(const Poly& p) {
    if (!p.field().is_binary()) throw std::invalid_argument("Gf2Poly: polynomial not over F_2");
    return from_bits(std::vector<FieldElem>(p.coeffs().begin(), p.coeffs().end()));
}

Gf2Poly Gf2Poly::monomial(std::size_t exponent) {
    Gf2Poly out;
    out.words_.assign(exponent / 64 + 2, 0);
    out.words_[exponent / 64] = std::uint64_t{1} << (exponent % 64);
    out.degree_ = static_cast<std::int64_t>(exponent);
    return out;
}

Poly Gf2Poly::to_poly() const {
    std::vector<FieldElem> c(static_cast<std::size_t>(degree_ + 1), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = bit(i) ? 1 : 0;
    return Poly(PrimeField(2), std::move(c));
}

void Gf2Poly::recompute_degree(std::int64_t from) noexcept {
    if (from < 0 || words_.empty()) {
        degree_ = -1;
        return;
    }
    auto w = static_cast<std::size_t>(from) / 64;
    if (w >= words_.size()) w = words_.size() - 1;
    for (std::size_t i = w + 1; i-- > 0;) {
        std::uint64_t word = words_[i];
        if (i == static_cast<std::size_t>(from) / 64 && from % 64 != 63) {
            word &= (std::uint64_t{1} << (from % 64 + 1)) - 1;
        }
        if (word != 0) {
            degree_ = static_cast<std::int64_t>(i * 64 + 63 - std::countl_zero(word));
            return;
        }
    }
    degree_ = -1;
}

Gf2Poly Gf2Poly::reduce_by(const Gf2Poly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("Gf2Poly: division by zero");
    Gf2Poly quotient;
    if (degree_ < divisor.degree_) return quotient;
    const auto db = static_cast<std::size_t>(divisor.degree_);
    const auto da = static_cast<std::size_t>(degree_);
    const std::size_t div_words = db / 64 + 1;
    ensure_words(da / 64 + 3);
    quotient.words_.assign((da - db) / 64 + 2, 0);
    std::span<const std::uint64_t> src(divisor.words_.data(), div_words);
    for (std::size_t i = da + 1; i-- > db;) {
        if (!bit(i)) continue;
        const std::size_t shift = i - db;
        quotient.words_[shift / 64] |= std::uint64_t{1} << (shift % 64);
        kernels::xor_shifted(words_, src, shift);
    }
    quotient.recompute_degree(static_cast<std::int64_t>(da - db));
    recompute_degree(static_cast<std::int64_t>(db) - 1);
    return quotient;
}

bool operator==(const Gf2Poly& a, const Gf2Poly& b) noexcept {
    if (a.degree_ != b.degree_) return false;
    for (std::int64_t i = 0; i <= a.degree_; ++i) {
        if (a.bit(static_cast<std::size_t>(i)) != b.bit(static_cast<std::size_t>(i))) return false;
    }
    return true;
}

} // namespace seqc
