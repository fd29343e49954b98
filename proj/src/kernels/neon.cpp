#include "seqc/kernels.hpp"

#if defined(SEQC_ENABLE_SIMD) && defined(__aarch64__)
#define SEQC_HAVE_NEON_BUILD 1
#include <arm_neon.h>
#else
#define SEQC_HAVE_NEON_BUILD 0
#endif

#include <bit>
#include <limits>

namespace seqc::kernels {

#if SEQC_HAVE_NEON_BUILD
namespace {

void xor_shifted_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t src_words,
                      std::size_t shift) {
    std::uint64_t* out = dst + shift / 64;
    const unsigned r = shift % 64;
    std::size_t w = 0;
    if (r == 0) {
        for (; w + 2 <= src_words; w += 2) vst1q_u64(out + w, veorq_u64(vld1q_u64(out + w), vld1q_u64(src + w)));
        for (; w < src_words; ++w) out[w] ^= src[w];
        return;
    }
    const int64x2_t left = vdupq_n_s64(static_cast<std::int64_t>(r));
    const int64x2_t right = vdupq_n_s64(-static_cast<std::int64_t>(64 - r));
    if (src_words > 0) {
        out[0] ^= src[0] << r;
        w = 1;
    }
    for (; w + 2 <= src_words; w += 2) {
        uint64x2_t v = vorrq_u64(vshlq_u64(vld1q_u64(src + w), left), vshlq_u64(vld1q_u64(src + w - 1), right));
        vst1q_u64(out + w, veorq_u64(vld1q_u64(out + w), v));
    }
    for (; w < src_words; ++w) out[w] ^= (src[w] << r) | (src[w - 1] >> (64 - r));
    if (src_words > 0) out[src_words] ^= src[src_words - 1] >> (64 - r);
}

bool and_parity_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t bit_offset,
                     std::size_t words) {
    const std::uint64_t* in = b + bit_offset / 64;
    const unsigned r = bit_offset % 64;
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t w = 0;
    if (r == 0) {
        for (; w + 2 <= words; w += 2) acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + w), vld1q_u64(in + w)));
    } else {
        const int64x2_t right = vdupq_n_s64(-static_cast<std::int64_t>(r));
        const int64x2_t left = vdupq_n_s64(static_cast<std::int64_t>(64 - r));
        for (; w + 2 <= words; w += 2) {
            uint64x2_t y = vorrq_u64(vshlq_u64(vld1q_u64(in + w), right), vshlq_u64(vld1q_u64(in + w + 1), left));
            acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + w), y));
        }
    }
    std::uint64_t tail = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; w < words; ++w) {
        std::uint64_t y = r == 0 ? in[w] : ((in[w] >> r) | (in[w + 1] << (64 - r)));
        tail ^= a[w] & y;
    }
    return (std::popcount(tail) & 1) != 0;
}

std::uint32_t dot_neon(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint32_t p) {
    const std::uint64_t pm1 = p - 1;
    const std::uint64_t budget =
        pm1 == 1 ? std::numeric_limits<std::uint64_t>::max() / 2 : (~std::uint64_t{0} - p) / (pm1 * pm1);
    uint64x2_t acc = vdupq_n_u64(0);
    std::uint64_t pending = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = vaddq_u64(acc, vmull_u32(vld1_u32(a + i), vld1_u32(b + i)));
        if (++pending == budget) {
            std::uint64_t l0 = vgetq_lane_u64(acc, 0) % p;
            std::uint64_t l1 = vgetq_lane_u64(acc, 1) % p;
            acc = vcombine_u64(vcreate_u64(l0), vcreate_u64(l1));
            pending = 0;
        }
    }
    std::uint64_t total = (vgetq_lane_u64(acc, 0) % p + vgetq_lane_u64(acc, 1) % p) % p;
    for (; i < n; ++i) total = (total + static_cast<std::uint64_t>(a[i]) * b[i] % p) % p;
    return static_cast<std::uint32_t>(total);
}

void axpy_neon(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
               std::uint32_t p) {
    if (c == 0) return;
    const auto c_shoup = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
    const uint32x2_t cq = vdup_n_u32(c_shoup);
    const uint32x4_t cv = vdupq_n_u32(c);
    const uint32x4_t pv = vdupq_n_u32(p);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t s = vld1q_u32(src + i);
        uint32x2_t qlo = vshrn_n_u64(vmull_u32(vget_low_u32(s), cq), 32);
        uint32x2_t qhi = vshrn_n_u64(vmull_u32(vget_high_u32(s), cq), 32);
        uint32x4_t q = vcombine_u32(qlo, qhi);
        uint32x4_t r = vsubq_u32(vmulq_u32(s, cv), vmulq_u32(q, pv));
        r = vminq_u32(r, vsubq_u32(r, pv));
        uint32x4_t t = vaddq_u32(vld1q_u32(dst + i), r);
        t = vminq_u32(t, vsubq_u32(t, pv));
        vst1q_u32(dst + i, t);
    }
    for (; i < n; ++i) {
        dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
    }
}

const KernelTable neon{Isa::neon, &xor_shifted_neon, &and_parity_neon, &dot_neon, &axpy_neon};

} // namespace

namespace detail {
const KernelTable* neon_table() noexcept { return &neon; }
} // namespace detail

#else

namespace detail {
const KernelTable* neon_table() noexcept { return nullptr; }
} // namespace detail

#endif

} // namespace seqc::kernels
