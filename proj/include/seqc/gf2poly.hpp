#pragma once

#include <cstdint>
#include <vector>

#include "seqc/poly.hpp"

namespace seqc {

/// Bit-packed polynomial over F_2 (bit i of word i/64 is the coefficient of x^i).
/// Internal fast path for the binary Euclid and Berlekamp-Massey kernels;
/// convert to and from Poly at the boundary.
class Gf2Poly {
public:
    Gf2Poly() = default;
    static Gf2Poly from_poly(const Poly& p);
    static Gf2Poly monomial(std::size_t exponent);
    /// Coefficient list (0/1 values) low to high.
    static Gf2Poly from_bits(const std::vector<FieldElem>& bits);

    Poly to_poly() const;
    bool is_zero() const noexcept { return degree_ < 0; }
    /// -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return degree_; }
    bool bit(std::size_t i) const noexcept {
        return i / 64 < words_.size() && ((words_[i / 64] >> (i % 64)) & 1u) != 0;
    }

    /// Replace *this by (*this mod divisor); returns the quotient.
    Gf2Poly reduce_by(const Gf2Poly& divisor);

    friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) noexcept;

private:
    void recompute_degree(std::int64_t from) noexcept;
    void ensure_words(std::size_t n) { if (words_.size() < n) words_.resize(n, 0); }

    std::vector<std::uint64_t> words_;
    std::int64_t degree_ = -1;
};

} // namespace seqc
