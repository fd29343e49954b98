#include "seqc/kernels.hpp"

#if defined(SEQC_ENABLE_SIMD) && (defined(__x86_64__) || defined(_M_X64))
#define SEQC_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#else
#define SEQC_HAVE_AVX2_BUILD 0
#endif

#include <bit>
#include <limits>

namespace seqc::kernels {

#if SEQC_HAVE_AVX2_BUILD
namespace {

#define SEQC_AVX2 __attribute__((target("avx2")))

SEQC_AVX2 void xor_shifted_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t src_words,
                                std::size_t shift) {
    std::uint64_t* out = dst + shift / 64;
    const unsigned r = shift % 64;
    std::size_t w = 0;
    if (r == 0) {
        for (; w + 4 <= src_words; w += 4) {
            __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + w));
            __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + w), _mm256_xor_si256(d, s));
        }
        for (; w < src_words; ++w) out[w] ^= src[w];
        return;
    }
    // out[w] ^= (src[w] << r) | (src[w-1] >> (64-r)) for w in [0, src_words].
    const __m128i left = _mm_cvtsi32_si128(static_cast<int>(r));
    const __m128i right = _mm_cvtsi32_si128(static_cast<int>(64 - r));
    if (src_words > 0) {
        out[0] ^= src[0] << r;
        w = 1;
    }
    for (; w + 4 <= src_words; w += 4) {
        __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w));
        __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w - 1));
        __m256i v = _mm256_or_si256(_mm256_sll_epi64(cur, left), _mm256_srl_epi64(prev, right));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + w));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + w), _mm256_xor_si256(d, v));
    }
    for (; w < src_words; ++w) out[w] ^= (src[w] << r) | (src[w - 1] >> (64 - r));
    if (src_words > 0) out[src_words] ^= src[src_words - 1] >> (64 - r);
}

SEQC_AVX2 bool and_parity_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t bit_offset,
                               std::size_t words) {
    const std::uint64_t* in = b + bit_offset / 64;
    const unsigned r = bit_offset % 64;
    __m256i acc = _mm256_setzero_si256();
    std::size_t w = 0;
    if (r == 0) {
        for (; w + 4 <= words; w += 4) {
            __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
            __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + w));
            acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
        }
    } else {
        const __m128i right = _mm_cvtsi32_si128(static_cast<int>(r));
        const __m128i left = _mm_cvtsi32_si128(static_cast<int>(64 - r));
        for (; w + 4 <= words; w += 4) {
            __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
            __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + w));
            __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + w + 1));
            __m256i y = _mm256_or_si256(_mm256_srl_epi64(lo, right), _mm256_sll_epi64(hi, left));
            acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
        }
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t tail = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; w < words; ++w) {
        std::uint64_t y = r == 0 ? in[w] : ((in[w] >> r) | (in[w + 1] << (64 - r)));
        tail ^= a[w] & y;
    }
    return (std::popcount(tail) & 1) != 0;
}

SEQC_AVX2 std::uint32_t dot_avx2(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                                 std::uint32_t p) {
    // Four 64-bit lane accumulators. After a reduction each lane is < p, so
    // `budget` further products of at most (p-1)^2 cannot overflow.
    const std::uint64_t pm1 = p - 1;
    const std::uint64_t budget =
        pm1 == 1 ? std::numeric_limits<std::uint64_t>::max() / 2 : (~std::uint64_t{0} - p) / (pm1 * pm1);
    alignas(32) std::uint64_t lanes[4] = {0, 0, 0, 0};
    __m256i acc = _mm256_setzero_si256();
    std::uint64_t pending = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
        __m256i y = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i)));
        acc = _mm256_add_epi64(acc, _mm256_mul_epu32(x, y));
        if (++pending == budget) {
            _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
            for (auto& l : lanes) l %= p;
            acc = _mm256_load_si256(reinterpret_cast<const __m256i*>(lanes));
            pending = 0;
        }
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = 0;
    for (auto l : lanes) total = (total + l % p) % p;
    for (; i < n; ++i) total = (total + static_cast<std::uint64_t>(a[i]) * b[i] % p) % p;
    return static_cast<std::uint32_t>(total);
}

SEQC_AVX2 void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                         std::uint32_t p) {
    if (c == 0) return;
    // Shoup multiplication: with c' = floor(c * 2^32 / p) the estimate
    // q = floor(c' * s / 2^32) is the true quotient or one less, so
    // c*s - q*p lies in [0, 2p) and fits 32 bits.
    const auto c_shoup = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i cq = _mm256_set1_epi32(static_cast<int>(c_shoup));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(s, cq), 32);
        __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(s, 32), cq);
        __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
        __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(s, cv), _mm256_mullo_epi32(q, pv));
        r = _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i t = _mm256_add_epi32(d, r);
        t = _mm256_min_epu32(t, _mm256_sub_epi32(t, pv));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
    }
    for (; i < n; ++i) {
        dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
    }
}

const KernelTable avx2{Isa::avx2, &xor_shifted_avx2, &and_parity_avx2, &dot_avx2, &axpy_avx2};

} // namespace

namespace detail {
const KernelTable* avx2_table() noexcept {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") ? &avx2 : nullptr;
}
} // namespace detail

#else

namespace detail {
const KernelTable* avx2_table() noexcept { return nullptr; }
} // namespace detail

#endif

} // namespace seqc::kernels
