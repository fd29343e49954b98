#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace seqc {

/// Element of a prime field, stored as its canonical residue in [0, p).
using FieldElem = std::uint32_t;

/// The prime field F_p for 2 <= p <= 2^31 - 1. Primality is checked on
/// construction; all arithmetic assumes canonical residues.
class PrimeField {
public:
    static constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 31) - 1;

    explicit PrimeField(std::uint64_t p);

    std::uint32_t p() const noexcept { return p_; }
    bool is_binary() const noexcept { return p_ == 2; }
    bool contains(std::uint64_t v) const noexcept { return v < p_; }

    FieldElem add(FieldElem a, FieldElem b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    FieldElem sub(FieldElem a, FieldElem b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    FieldElem neg(FieldElem a) const noexcept { return a == 0 ? 0 : p_ - a; }
    FieldElem mul(FieldElem a, FieldElem b) const noexcept {
        return static_cast<FieldElem>(static_cast<std::uint64_t>(a) * b % p_);
    }
    FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;
    /// Multiplicative inverse; throws std::domain_error on zero.
    FieldElem inv(FieldElem a) const;
    FieldElem from_int(std::int64_t v) const noexcept;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Throws std::invalid_argument unless both operands live in the same field.
void require_same_field(const PrimeField& a, const PrimeField& b);

/// Exponential valuation / degree with a distinguished -infinity for zero.
class Valuation {
public:
    constexpr explicit Valuation(std::int64_t v) noexcept : finite_(true), value_(v) {}
    static constexpr Valuation neg_inf() noexcept { return Valuation(); }

    constexpr bool is_neg_inf() const noexcept { return !finite_; }
    /// The finite value; throws std::logic_error for -infinity.
    std::int64_t value() const;

    friend constexpr bool operator==(const Valuation& a, const Valuation& b) noexcept {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) noexcept {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }
    friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) noexcept {
        if (!a.finite_ || !b.finite_) return neg_inf();
        return Valuation(a.value_ + b.value_);
    }

    std::string to_string() const;

private:
    constexpr Valuation() noexcept : finite_(false), value_(0) {}
    bool finite_;
    std::int64_t value_;
};

} // namespace seqc
