#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "seqc/field.hpp"
#include "seqc/poly.hpp"

namespace seqc {

// ---------------------------------------------------------------------------
// Sequence specifications
// ---------------------------------------------------------------------------

/// e_P(n) mod p, where P is the base-p expansion of a (k digits, 0 < a < p^k),
/// via r_n = r_{n div p} + [n = a mod p^k], r_0 = 0.
struct PatternSeq {
    std::uint32_t p;
    std::uint32_t k;
    std::uint64_t a;
    friend bool operator==(const PatternSeq&, const PatternSeq&) = default;
};

/// Base-p digit sum of n, reduced mod p.
struct SumOfDigitsSeq {
    std::uint32_t p;
    friend bool operator==(const SumOfDigitsSeq&, const SumOfDigitsSeq&) = default;
};

/// 1 iff the binary expansion of n has no block of zeros of odd length; b_0 = 1.
struct BaumSweetSeq {
    friend bool operator==(const BaumSweetSeq&, const BaumSweetSeq&) = default;
};

/// Regular paperfolding: for n = m 2^j with m odd, 1 iff m = 1 mod 4; v_0 free.
struct PaperFoldingSeq {
    FieldElem v0 = 1;
    friend bool operator==(const PaperFoldingSeq&, const PaperFoldingSeq&) = default;
};

/// w_{2n} = 1, w_{2n+1} = w_n + 1 over F_2.
struct PerfectProfileSeq {
    friend bool operator==(const PerfectProfileSeq&, const PerfectProfileSeq&) = default;
};

using SequenceSpec = std::variant<PatternSeq, SumOfDigitsSeq, BaumSweetSeq, PaperFoldingSeq, PerfectProfileSeq>;

SequenceSpec thue_morse();
SequenceSpec rudin_shapiro();
/// Pattern sequence for the all-one block of length k over F_2 (a = 2^k - 1).
SequenceSpec all_ones_pattern(std::uint32_t k);
SequenceSpec pattern(std::uint32_t p, std::uint32_t k, std::uint64_t a);
SequenceSpec sum_of_digits(std::uint32_t p);
SequenceSpec baum_sweet();
SequenceSpec paper_folding(FieldElem v0 = 1);
SequenceSpec perfect_profile();

/// Throws std::invalid_argument when the parameters are out of range.
void validate(const SequenceSpec& spec);
PrimeField field_of(const SequenceSpec& spec);
/// Stable kebab-case name, e.g. "thue-morse", "pattern-3-2-4", "sum-of-digits-5".
std::string canonical_name(const SequenceSpec& spec);
/// Inverse of canonical_name.
std::optional<SequenceSpec> parse_canonical_name(std::string_view name);
/// For the all-one binary pattern of length k, returns k.
std::optional<std::uint32_t> all_ones_length(const SequenceSpec& spec);

/// The seven sequences every suite covers.
std::vector<SequenceSpec> builtin_specs();

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

FieldElem term(const SequenceSpec& spec, std::uint64_t n);
/// term(0) .. term(n-1).
std::vector<FieldElem> prefix(const SequenceSpec& spec, std::size_t n);

/// Overlapping occurrences of `digits` (most significant first) in the
/// standard base-p expansion of n. Patterns with a leading zero are rejected.
std::uint64_t pattern_count_oracle(std::uint32_t p, std::span<const std::uint32_t> digits, std::uint64_t n);

/// Base-p digits of a padded to exactly k digits, most significant first.
std::vector<std::uint32_t> pattern_digits(std::uint32_t p, std::uint32_t k, std::uint64_t a);

// ---------------------------------------------------------------------------
// Algebraic witnesses h(s, t) = sum_i h_i(t) s^i with h(G(t), t) = 0
// ---------------------------------------------------------------------------

struct AlgebraicWitness {
    PrimeField field;
    std::vector<Poly> h;  // h[i] multiplies s^i
    std::uint32_t d = 0;  // s-degree
    std::int64_t m = 0;   // max_i (deg h_i - i) over nonzero h_i
    bool no_rational_zero = false;
    std::string label;

    /// Largest total degree deg h_i + i over the nonzero terms.
    std::int64_t total_degree() const;
};

/// Builds a witness from its coefficient polynomials, deriving d and M.
AlgebraicWitness make_witness(std::vector<Poly> h, bool no_rational_zero, std::string label);
/// Recompute M from the coefficients.
std::int64_t witness_m(std::span<const Poly> h);

/// The primary witness for a built-in sequence.
AlgebraicWitness witness(const SequenceSpec& spec);
/// All witnesses known for the sequence (the primary first).
std::vector<AlgebraicWitness> witnesses(const SequenceSpec& spec);

/// sum_i h_i(t) G(t)^i mod t^N for an arbitrary prefix of length N.
Poly residual(const AlgebraicWitness& w, std::span<const FieldElem> prefix);
/// residual of the primary witness against prefix(spec, N). N >= 1.
Poly residual(const SequenceSpec& spec, std::size_t n);

// ---------------------------------------------------------------------------
// Linear complexity profile container
// ---------------------------------------------------------------------------

struct Profile {
    std::vector<std::size_t> values;  // values[N-1] = L(N)

    std::size_t n_max() const noexcept { return values.size(); }
    /// L(N) for 1 <= N <= n_max.
    std::size_t at(std::size_t n) const { return values.at(n - 1); }
    friend bool operator==(const Profile&, const Profile&) = default;
};

/// First N breaking 0 <= L(N) <= N, monotonicity or L(N) <= max(L(N-1), N - L(N-1)).
std::optional<std::size_t> first_profile_violation(const Profile& profile);

} // namespace seqc
