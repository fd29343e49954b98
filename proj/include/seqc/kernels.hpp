#pragma once

// Data-parallel inner loops shared by the polynomial, Berlekamp-Massey and
// Euclid code. Every kernel has a portable scalar reference; AVX2 (x86-64)
// and NEON (aarch64) variants are selected at runtime and must agree with it
// bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace seqc::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
    Isa isa;

    // dst ^= src << shift, as bit strings (bit i of word w is bit 64w+i).
    // dst must hold at least shift/64 + src_words + 1 words.
    void (*gf2_xor_shifted)(std::uint64_t* dst, const std::uint64_t* src, std::size_t src_words,
                            std::size_t shift);

    // Parity of popcount(a & (b >> bit_offset)) over the first `words` words of a.
    // b must hold at least bit_offset/64 + words + 1 words.
    bool (*gf2_and_parity)(const std::uint64_t* a, const std::uint64_t* b, std::size_t bit_offset,
                           std::size_t words);

    // sum a[i]*b[i] mod p; inputs are canonical residues, p < 2^31.
    std::uint32_t (*fp_dot)(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                            std::uint32_t p);

    // dst[i] = (dst[i] + c*src[i]) mod p; canonical residues, c < p < 2^31.
    void (*fp_axpy)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                    std::uint32_t p);
};

/// Table in use. First call picks the best ISA the CPU supports unless the
/// SEQC_KERNELS environment variable names another one (scalar|avx2|neon).
const KernelTable& active() noexcept;

/// Table for a specific ISA, or nullptr when it was not built or the CPU lacks it.
const KernelTable* table_for(Isa isa) noexcept;

std::vector<Isa> available_isas();

/// Force a kernel set; throws std::invalid_argument if unavailable.
void select(Isa isa);

/// RAII override of the active kernel set, for tests and benchmarks.
class ScopedIsa {
public:
    explicit ScopedIsa(Isa isa);
    ~ScopedIsa();
    ScopedIsa(const ScopedIsa&) = delete;
    ScopedIsa& operator=(const ScopedIsa&) = delete;

private:
    Isa previous_;
};

// Span front-ends with size checks, used by the library proper.

void xor_shifted(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::size_t shift);
bool and_parity(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                std::size_t bit_offset);
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);

namespace detail {
extern const KernelTable scalar_table;
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;
} // namespace detail

} // namespace seqc::kernels
