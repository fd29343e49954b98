#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqc/autoseq.hpp"
#include "seqc/laurent.hpp"
#include "seqc/poly.hpp"

namespace seqc {

/// Continued fraction R = A_0 + 1/(A_1 + 1/(A_2 + ...)) of a truncated
/// Laurent series known down to x^{-precision}.
///
/// `quotients` holds A_0 .. A_J for every j with deg Q_{j-1} + deg Q_j <= precision;
/// for those the degree of A_j (hence deg Q_j) is the same as for any series
/// sharing the known coefficients. The polynomial A_j itself is determined only
/// when 2 deg Q_j <= precision; `reliable_count` is the largest such j.
struct CFExpansion {
    PrimeField field;
    std::int64_t precision = 0;
    std::vector<Poly> quotients;
    std::vector<std::int64_t> q_degrees;  // deg Q_0 .. deg Q_J
    std::size_t reliable_count = 0;
    /// The Euclidean remainder vanished: the known part is an exact finite fraction.
    bool terminated = false;

    std::size_t size() const noexcept { return quotients.size(); }
};

struct Convergent {
    Poly p;
    Poly q;
};

/// Continued fraction via the extended Euclidean algorithm on (x^P g-scaled R, x^P);
/// F_2 inputs run on bit-packed words. Throws std::domain_error for a zero
/// series or negative precision.
CFExpansion cf_expand(const LaurentSeries& r);

/// The same expansion by the polynomial-part / series-inversion recursion
/// A_{j+1} = Pol(B_j^{-1}), B_{j+1} = B_j^{-1} - A_{j+1}. Emits exactly the
/// quotients whose coefficients are determined by the known precision.
std::vector<Poly> cf_expand_by_inversion(const LaurentSeries& r);

/// (P_j, Q_j) for j = 0 .. count-1 (default: all quotients), from
/// P_{-1} = 1, P_0 = A_0, Q_{-1} = 0, Q_0 = 1 and X_j = A_j X_{j-1} + X_{j-2}.
std::vector<Convergent> convergents(const CFExpansion& cf, std::optional<std::size_t> count = std::nullopt);

/// L(1..n_max) from the denominators' degrees: L(N) = deg Q_j for the j with
/// deg Q_{j-1} + deg Q_j <= N < deg Q_j + deg Q_{j+1}. Throws std::domain_error
/// when r is known to fewer than n_max coefficients below x^0.
Profile profile_from_cf(const LaurentSeries& r, std::size_t n_max);

struct CongruenceReport {
    std::size_t checked = 0;
    std::optional<std::size_t> first_failure;  // index j
    std::string detail;
    bool ok() const noexcept { return !first_failure.has_value(); }
};

/// For the all-one binary pattern of length k: Q_j = 1 mod x+1 (k = 1), or
/// Q_{2j} = 1 and Q_{2j+1} = x+1 mod x^{2^{k-1}}+1 (k >= 2), for every reliable j.
/// Each Q_j is also checked against the periodicity of Q U^{2^k} (see
/// q_times_u_power_reconstruction).
CongruenceReport q_congruences(const CFExpansion& cf, std::uint32_t k);

struct PeriodicityCheck {
    bool periodic = false;  // b_i = b_{i + 2^k} over the inspected range
    Poly reconstructed;     // b_1 x^{2^k - 1} + ... + b_{2^k}
    Poly expected;          // Q mod x^{2^k} + 1
};

/// Multiplies Q by U^{2^k}, U = sum_{i>=0} x^{-i}, as truncated series and
/// reads back the coefficients b_i of x^{-i} for 0 <= i < 3 * 2^k.
PeriodicityCheck q_times_u_power_reconstruction(const Poly& q, std::uint32_t k);

/// (1+x) R^2 + R + U^{2^k} x^{-2^k}, with the precision implied by R's.
LaurentSeries all_ones_functional_residual(const LaurentSeries& r, std::uint32_t k);

} // namespace seqc
