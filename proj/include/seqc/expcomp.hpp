#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "seqc/field.hpp"
#include "seqc/poly.hpp"

namespace seqc {

/// c * s^i * t^j
struct Monomial {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    FieldElem c = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class ExpansionStatus { zero_prefix, found, cap_exceeded };

const char* status_name(ExpansionStatus s) noexcept;

struct ExpansionResult {
    std::size_t n = 0;
    ExpansionStatus status = ExpansionStatus::zero_prefix;
    /// E_N; empty when the search cap was exceeded.
    std::optional<std::uint32_t> e;
    /// Nonzero h with h(G, t) = 0 mod t^N, sorted by (i, j); empty for a zero prefix.
    std::vector<Monomial> witness;
};

inline constexpr std::uint32_t default_expansion_cap = 8;

/// Least total degree D <= d_max of a nonzero h(s, t) with h(G(t), t) = 0 mod t^N,
/// where G is the generating function of the prefix and N its length.
ExpansionResult expansion_complexity(std::span<const FieldElem> prefix, const PrimeField& field,
                                     std::uint32_t d_max = default_expansion_cap);

/// expansion_complexity for every leading block prefix[0, N), N = 1 .. size.
std::vector<ExpansionResult> expansion_profile(std::span<const FieldElem> prefix, const PrimeField& field,
                                               std::uint32_t d_max = default_expansion_cap);

/// sum c G^i t^j mod t^N, with each G^i from its own truncated powering.
Poly evaluate_witness(std::span<const Monomial> h, std::span<const FieldElem> prefix, const PrimeField& field);

} // namespace seqc
