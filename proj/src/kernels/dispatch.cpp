#include "seqc/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace seqc::kernels {
namespace {

const KernelTable* best_available() noexcept {
    if (const auto* t = detail::avx2_table()) return t;
    if (const auto* t = detail::neon_table()) return t;
    return &detail::scalar_table;
}

const KernelTable* initial_table() noexcept {
    if (const char* env = std::getenv("SEQC_KERNELS")) {
        std::string_view want(env);
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
            if (want == isa_name(isa)) {
                if (const auto* t = table_for(isa)) return t;
            }
        }
    }
    return best_available();
}

std::atomic<const KernelTable*>& current() noexcept {
    static std::atomic<const KernelTable*> table{initial_table()};
    return table;
}

} // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "unknown";
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_acquire); }

const KernelTable* table_for(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar: return &detail::scalar_table;
    case Isa::avx2: return detail::avx2_table();
    case Isa::neon: return detail::neon_table();
    }
    return nullptr;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (table_for(isa) != nullptr) out.push_back(isa);
    }
    return out;
}

void select(Isa isa) {
    const auto* t = table_for(isa);
    if (t == nullptr) {
        throw std::invalid_argument("kernel set '" + std::string(isa_name(isa)) + "' unavailable");
    }
    current().store(t, std::memory_order_release);
}

ScopedIsa::ScopedIsa(Isa isa) : previous_(active().isa) { select(isa); }
ScopedIsa::~ScopedIsa() { current().store(table_for(previous_), std::memory_order_release); }

void xor_shifted(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::size_t shift) {
    if (src.empty()) return;
    if (dst.size() < shift / 64 + src.size() + 1) throw std::out_of_range("xor_shifted: destination too short");
    active().gf2_xor_shifted(dst.data(), src.data(), src.size(), shift);
}

bool and_parity(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b, std::size_t bit_offset) {
    if (a.empty()) return false;
    if (b.size() < bit_offset / 64 + a.size() + 1) throw std::out_of_range("and_parity: window too short");
    return active().gf2_and_parity(a.data(), b.data(), bit_offset, a.size());
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p) {
    if (a.size() != b.size()) throw std::invalid_argument("dot_mod: length mismatch");
    return active().fp_dot(a.data(), b.data(), a.size(), p);
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p) {
    if (dst.size() < src.size()) throw std::out_of_range("axpy_mod: destination too short");
    active().fp_axpy(dst.data(), src.data(), src.size(), c, p);
}

} // namespace seqc::kernels
