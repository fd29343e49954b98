#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "seqc/field.hpp"
#include "seqc/poly.hpp"

namespace seqc::testing {

inline std::vector<FieldElem> random_symbols(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
    std::uniform_int_distribution<FieldElem> d(0, p - 1);
    std::vector<FieldElem> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

inline Poly random_poly(std::mt19937_64& rng, const PrimeField& f, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    return Poly(f, random_symbols(rng, len(rng), f.p()));
}

// Coefficients as plain integers, low to high.
inline std::vector<FieldElem> coeffs_of(const Poly& a) { return {a.coeffs().begin(), a.coeffs().end()}; }

} // namespace seqc::testing
