#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqc/autoseq.hpp"
#include "seqc/poly.hpp"

namespace seqc {

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// num/den with den > 0; not reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    std::int64_t floor() const noexcept;
    std::int64_t ceil() const noexcept;
};

/// Exact comparisons of an integer against a rational, by cross-multiplication.
bool operator<=(const Rational& r, std::int64_t v) noexcept;
bool operator<=(std::int64_t v, const Rational& r) noexcept;

/// (N - M)/d <= L(N) <= ((d - 1)N + M + 1)/d.
struct BoundPair {
    Rational lower;
    Rational upper;
    std::uint32_t d = 1;
    std::int64_t m = 0;
    std::int64_t n = 0;

    bool contains(std::int64_t l) const noexcept { return lower <= l && l <= upper; }
};

/// Throws std::invalid_argument unless d >= 1 and N >= 1.
BoundPair general_bounds(std::uint32_t d, std::int64_t m, std::int64_t n);

/// L(N) of the all-one binary pattern sequence of length k.
std::int64_t allones_exact(std::uint32_t k, std::int64_t n);
/// 2 floor((N + 2)/4).
std::int64_t thue_morse_exact(std::int64_t n);
/// floor((N + 1)/2).
std::int64_t perfect_profile_exact(std::int64_t n);
/// Predicted partial quotient A_j (j >= 1) of R for the all-one pattern of length k.
Poly cf_prediction(std::uint32_t k, std::size_t j);

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass = true;
    std::optional<std::int64_t> first_fail_n;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::string spec;
    std::size_t n_max = 0;
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
    /// Smallest first_fail_n over failed checks.
    std::optional<std::int64_t> first_failure() const noexcept;
};

/// Every check that applies to `spec`, run on its first n_max terms.
VerifyReport verify(const SequenceSpec& spec, std::size_t n_max);

/// The same checks on a caller-supplied prefix claimed to come from `spec`.
VerifyReport verify_prefix(const SequenceSpec& spec, std::span<const FieldElem> prefix);

/// The built-in specs plus the all-one patterns k = 1 .. k_max, without repeats.
std::vector<SequenceSpec> verification_suite(std::uint32_t k_max);

/// Worker count from SEQC_THREADS (default: hardware concurrency, at least 1).
unsigned worker_threads();

} // namespace seqc
