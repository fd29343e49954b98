#include "seqc/kernels.hpp"

#include <bit>

namespace seqc::kernels {
namespace {

void xor_shifted_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t src_words,
                        std::size_t shift) {
    const std::size_t q = shift / 64;
    const unsigned r = shift % 64;
    std::uint64_t* out = dst + q;
    if (r == 0) {
        for (std::size_t w = 0; w < src_words; ++w) out[w] ^= src[w];
        return;
    }
    std::uint64_t carry = 0;
    for (std::size_t w = 0; w < src_words; ++w) {
        out[w] ^= (src[w] << r) | carry;
        carry = src[w] >> (64 - r);
    }
    out[src_words] ^= carry;
}

bool and_parity_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t bit_offset,
                       std::size_t words) {
    const std::uint64_t* in = b + bit_offset / 64;
    const unsigned r = bit_offset % 64;
    std::uint64_t acc = 0;
    if (r == 0) {
        for (std::size_t w = 0; w < words; ++w) acc ^= a[w] & in[w];
    } else {
        for (std::size_t w = 0; w < words; ++w) {
            acc ^= a[w] & ((in[w] >> r) | (in[w + 1] << (64 - r)));
        }
    }
    return (std::popcount(acc) & 1) != 0;
}

std::uint32_t dot_scalar(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                         std::uint32_t p) {
    __extension__ unsigned __int128 acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += static_cast<std::uint64_t>(a[i]) * b[i];
    return static_cast<std::uint32_t>(acc % p);
}

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                 std::uint32_t p) {
    if (c == 0) return;
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
    }
}

} // namespace

namespace detail {
const KernelTable scalar_table{Isa::scalar, &xor_shifted_scalar, &and_parity_scalar, &dot_scalar,
                               &axpy_scalar};
} // namespace detail

} // namespace seqc::kernels
