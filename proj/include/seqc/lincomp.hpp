#pragma once

#include <span>
#include <vector>

#include "seqc/autoseq.hpp"
#include "seqc/field.hpp"

namespace seqc {

/// u_{n+L} = c_{L-1} u_{n+L-1} + ... + c_0 u_n for 0 <= n <= N-L-1.
struct Recurrence {
    std::size_t length = 0;
    std::vector<FieldElem> coeffs;  // c_0 .. c_{L-1}

    /// Regenerate n symbols from the first `length` symbols of `seed`.
    std::vector<FieldElem> replay(std::span<const FieldElem> seed, std::size_t n, const PrimeField& field) const;
};

/// Nth linear complexity profile L(1..N) of the prefix by Berlekamp-Massey.
/// Over F_2 this runs on bit-packed words; O(N^2) field operations overall.
Profile bm_profile(std::span<const FieldElem> prefix, const PrimeField& field);

/// Shortest recurrence generating the whole prefix.
Recurrence bm_connection(std::span<const FieldElem> prefix, const PrimeField& field);

} // namespace seqc
