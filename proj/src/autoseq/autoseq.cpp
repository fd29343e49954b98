#include "seqc/autoseq.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace seqc {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// p^k, or 0 if it would exceed 2^62.
std::uint64_t checked_power(std::uint64_t p, std::uint32_t k) noexcept {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (r > (std::uint64_t{1} << 62) / p) return 0;
        r *= p;
    }
    return r;
}

void require_prime(std::uint64_t p, const char* what) {
    if (p > PrimeField::max_modulus || !is_prime(p)) {
        throw std::invalid_argument(std::string(what) + ": p = " + std::to_string(p) + " is not a supported prime");
    }
}

} // namespace

SequenceSpec thue_morse() { return PatternSeq{2, 1, 1}; }
SequenceSpec rudin_shapiro() { return PatternSeq{2, 2, 3}; }
SequenceSpec all_ones_pattern(std::uint32_t k) {
    if (k == 0 || k > 62) throw std::invalid_argument("all-ones pattern length must be in [1, 62]");
    return PatternSeq{2, k, (std::uint64_t{1} << k) - 1};
}
SequenceSpec pattern(std::uint32_t p, std::uint32_t k, std::uint64_t a) {
    SequenceSpec s = PatternSeq{p, k, a};
    validate(s);
    return s;
}
SequenceSpec sum_of_digits(std::uint32_t p) {
    SequenceSpec s = SumOfDigitsSeq{p};
    validate(s);
    return s;
}
SequenceSpec baum_sweet() { return BaumSweetSeq{}; }
SequenceSpec paper_folding(FieldElem v0) {
    SequenceSpec s = PaperFoldingSeq{v0};
    validate(s);
    return s;
}
SequenceSpec perfect_profile() { return PerfectProfileSeq{}; }

void validate(const SequenceSpec& spec) {
    std::visit(overloaded{
                   [](const PatternSeq& s) {
                       require_prime(s.p, "pattern");
                       if (s.k == 0) throw std::invalid_argument("pattern: k must be >= 1");
                       const std::uint64_t pk = checked_power(s.p, s.k);
                       if (pk == 0) throw std::invalid_argument("pattern: p^k too large");
                       if (s.a == 0 || s.a >= pk) {
                           throw std::invalid_argument("pattern: need 0 < a < p^k = " + std::to_string(pk));
                       }
                   },
                   [](const SumOfDigitsSeq& s) { require_prime(s.p, "sum-of-digits"); },
                   [](const PaperFoldingSeq& s) {
                       if (s.v0 > 1) throw std::invalid_argument("paper-folding: v0 must be 0 or 1");
                   },
                   [](const auto&) {},
               },
               spec);
}

PrimeField field_of(const SequenceSpec& spec) {
    return std::visit(overloaded{
                          [](const PatternSeq& s) { return PrimeField(s.p); },
                          [](const SumOfDigitsSeq& s) { return PrimeField(s.p); },
                          [](const auto&) { return PrimeField(2); },
                      },
                      spec);
}

std::string canonical_name(const SequenceSpec& spec) {
    return std::visit(overloaded{
                          [](const PatternSeq& s) -> std::string {
                              if (s == PatternSeq{2, 1, 1}) return "thue-morse";
                              if (s == PatternSeq{2, 2, 3}) return "rudin-shapiro";
                              return "pattern-" + std::to_string(s.p) + "-" + std::to_string(s.k) + "-" +
                                     std::to_string(s.a);
                          },
                          [](const SumOfDigitsSeq& s) -> std::string { return "sum-of-digits-" + std::to_string(s.p); },
                          [](const BaumSweetSeq&) -> std::string { return "baum-sweet"; },
                          [](const PaperFoldingSeq& s) -> std::string {
                              return s.v0 == 1 ? "paper-folding" : "paper-folding-v0-0";
                          },
                          [](const PerfectProfileSeq&) -> std::string { return "perfect-profile"; },
                      },
                      spec);
}

std::optional<SequenceSpec> parse_canonical_name(std::string_view name) {
    auto parse_numbers = [](std::string_view rest, std::size_t count) -> std::optional<std::vector<std::uint64_t>> {
        std::vector<std::uint64_t> out;
        while (!rest.empty() && out.size() < count) {
            std::uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
            if (ec != std::errc{}) return std::nullopt;
            out.push_back(v);
            rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
            if (!rest.empty()) {
                if (rest.front() != '-') return std::nullopt;
                rest.remove_prefix(1);
            }
        }
        if (!rest.empty() || out.size() != count) return std::nullopt;
        return out;
    };
    try {
        if (name == "thue-morse") return thue_morse();
        if (name == "rudin-shapiro") return rudin_shapiro();
        if (name == "baum-sweet") return baum_sweet();
        if (name == "paper-folding") return paper_folding(1);
        if (name == "paper-folding-v0-0") return paper_folding(0);
        if (name == "perfect-profile") return perfect_profile();
        if (name.starts_with("pattern-")) {
            auto v = parse_numbers(name.substr(8), 3);
            if (!v) return std::nullopt;
            return pattern(static_cast<std::uint32_t>((*v)[0]), static_cast<std::uint32_t>((*v)[1]), (*v)[2]);
        }
        if (name.starts_with("sum-of-digits-")) {
            auto v = parse_numbers(name.substr(14), 1);
            if (!v) return std::nullopt;
            return sum_of_digits(static_cast<std::uint32_t>((*v)[0]));
        }
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<std::uint32_t> all_ones_length(const SequenceSpec& spec) {
    const auto* s = std::get_if<PatternSeq>(&spec);
    if (s == nullptr || s->p != 2 || s->k > 62) return std::nullopt;
    if (s->a != (std::uint64_t{1} << s->k) - 1) return std::nullopt;
    return s->k;
}

std::vector<SequenceSpec> builtin_specs() {
    return {thue_morse(),      rudin_shapiro(), pattern(3, 2, 4),  sum_of_digits(3),
            baum_sweet(),      paper_folding(1), perfect_profile()};
}

FieldElem term(const SequenceSpec& spec, std::uint64_t n) {
    return std::visit(overloaded{
                          [n](const PatternSeq& s) -> FieldElem {
                              const std::uint64_t modulus = checked_power(s.p, s.k);
                              std::uint64_t count = 0;
                              for (std::uint64_t m = n; m != 0; m /= s.p) {
                                  if (m % modulus == s.a) ++count;
                              }
                              return static_cast<FieldElem>(count % s.p);
                          },
                          [n](const SumOfDigitsSeq& s) -> FieldElem {
                              std::uint64_t sum = 0;
                              for (std::uint64_t m = n; m != 0; m /= s.p) sum += m % s.p;
                              return static_cast<FieldElem>(sum % s.p);
                          },
                          [n](const BaumSweetSeq&) -> FieldElem {
                              std::uint64_t run = 0;
                              for (std::uint64_t m = n; m != 0; m >>= 1) {
                                  if ((m & 1) == 0) {
                                      ++run;
                                  } else {
                                      if (run % 2 == 1) return 0;
                                      run = 0;
                                  }
                              }
                              return 1;
                          },
                          [n](const PaperFoldingSeq& s) -> FieldElem {
                              if (n == 0) return s.v0;
                              const std::uint64_t m = n >> std::countr_zero(n);
                              return m % 4 == 1 ? 1 : 0;
                          },
                          [n](const PerfectProfileSeq&) -> FieldElem {
                              return static_cast<FieldElem>((1 + std::countr_one(n)) % 2);
                          },
                      },
                      spec);
}

std::vector<FieldElem> prefix(const SequenceSpec& spec, std::size_t n) {
    validate(spec);
    std::vector<FieldElem> out(n, 0);
    if (const auto* s = std::get_if<PatternSeq>(&spec)) {
        const std::uint64_t modulus = checked_power(s->p, s->k);
        for (std::size_t i = 1; i < n; ++i) {
            out[i] = (out[i / s->p] + (i % modulus == s->a ? 1u : 0u)) % s->p;
        }
        return out;
    }
    if (const auto* s = std::get_if<SumOfDigitsSeq>(&spec)) {
        for (std::size_t i = 1; i < n; ++i) out[i] = static_cast<FieldElem>((out[i / s->p] + i % s->p) % s->p);
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = term(spec, i);
    return out;
}

std::vector<std::uint32_t> pattern_digits(std::uint32_t p, std::uint32_t k, std::uint64_t a) {
    std::vector<std::uint32_t> d(k, 0);
    for (std::uint32_t i = k; i-- > 0;) {
        d[i] = static_cast<std::uint32_t>(a % p);
        a /= p;
    }
    if (a != 0) throw std::invalid_argument("pattern value has more than k digits");
    return d;
}

std::uint64_t pattern_count_oracle(std::uint32_t p, std::span<const std::uint32_t> digits, std::uint64_t n) {
    if (p < 2) throw std::invalid_argument("pattern_count_oracle: base must be >= 2");
    if (digits.empty()) throw std::invalid_argument("pattern_count_oracle: empty pattern");
    if (digits.front() == 0) throw std::invalid_argument("pattern_count_oracle: leading-zero pattern");
    for (auto d : digits) {
        if (d >= p) throw std::invalid_argument("pattern_count_oracle: digit out of range");
    }
    std::vector<std::uint32_t> expansion;
    do {
        expansion.push_back(static_cast<std::uint32_t>(n % p));
        n /= p;
    } while (n != 0);
    std::reverse(expansion.begin(), expansion.end());
    std::uint64_t count = 0;
    for (std::size_t i = 0; i + digits.size() <= expansion.size(); ++i) {
        if (std::equal(digits.begin(), digits.end(), expansion.begin() + static_cast<std::ptrdiff_t>(i))) ++count;
    }
    return count;
}

std::int64_t witness_m(std::span<const Poly> h) {
    std::int64_t m = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i].is_zero()) continue;
        m = std::max(m, h[i].degree().value() - static_cast<std::int64_t>(i));
    }
    if (m == std::numeric_limits<std::int64_t>::min()) throw std::invalid_argument("witness is the zero polynomial");
    return m;
}

std::int64_t AlgebraicWitness::total_degree() const {
    std::int64_t best = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!h[i].is_zero()) best = std::max(best, h[i].degree().value() + static_cast<std::int64_t>(i));
    }
    return best;
}

AlgebraicWitness make_witness(std::vector<Poly> h, bool no_rational_zero, std::string label) {
    while (!h.empty() && h.back().is_zero()) h.pop_back();
    if (h.empty()) throw std::invalid_argument("witness is the zero polynomial");
    const PrimeField f = h.front().field();
    for (const auto& hi : h) require_same_field(f, hi.field());
    AlgebraicWitness w{f, std::move(h), 0, 0, no_rational_zero, std::move(label)};
    w.d = static_cast<std::uint32_t>(w.h.size() - 1);
    w.m = witness_m(w.h);
    return w;
}

std::vector<AlgebraicWitness> witnesses(const SequenceSpec& spec) {
    validate(spec);
    const PrimeField f = field_of(spec);
    const Poly t = Poly::monomial(f, 1, 1);
    const Poly one = Poly::constant(f, 1);
    auto coeffs = [&](std::size_t size) { return std::vector<Poly>(size, Poly(f)); };
    std::vector<AlgebraicWitness> out;
    std::visit(
        overloaded{
            [&](const PatternSeq& s) {
                // (t-1)^{p^k+p-1} s^p - (t-1)^{p^k} s - t^a
                const std::uint64_t pk = checked_power(s.p, s.k);
                const Poly t_minus_1 = Poly::linear(f, f.neg(1));
                auto h = coeffs(s.p + 1);
                h[0] = -Poly::monomial(f, 1, s.a);
                h[1] = -pow(t_minus_1, pk);
                h[s.p] = pow(t_minus_1, pk + s.p - 1);
                out.push_back(make_witness(std::move(h), true, "pattern functional equation"));
                if (s == PatternSeq{2, 1, 1}) {
                    // s(t+1)^2 + s^2(t+1)^3 + t
                    const Poly t_plus_1 = Poly::linear(f, 1);
                    out.push_back(make_witness({t, pow(t_plus_1, 2), pow(t_plus_1, 3)}, true, "thue-morse direct"));
                }
            },
            [&](const SumOfDigitsSeq& s) {
                // (1-t)^{p+1} s^p - (1-t)^2 s + t
                const Poly one_minus_t = Poly::from_ints(f, {1, -1});
                auto h = coeffs(s.p + 1);
                h[0] = t;
                h[1] = -pow(one_minus_t, 2);
                h[s.p] = pow(one_minus_t, s.p + 1);
                out.push_back(make_witness(std::move(h), true, "sum-of-digits functional equation"));
            },
            [&](const BaumSweetSeq&) {
                out.push_back(make_witness({one, t, Poly(f), one}, true, "s^3 + t*s + 1"));
            },
            [&](const PaperFoldingSeq&) {
                const Poly t4_plus_1 = Poly::from_ints(f, {1, 0, 0, 0, 1});
                out.push_back(make_witness({t, t4_plus_1, t4_plus_1}, true, "(t^4+1)s^2 + (t^4+1)s + t"));
            },
            [&](const PerfectProfileSeq&) {
                out.push_back(make_witness({one, Poly::from_ints(f, {1, 1}), Poly::from_ints(f, {0, 1, 1})}, true,
                                           "t(t+1)s^2 + (t+1)s + 1"));
            },
        },
        spec);
    return out;
}

AlgebraicWitness witness(const SequenceSpec& spec) { return witnesses(spec).front(); }

Poly residual(const AlgebraicWitness& w, std::span<const FieldElem> prefix_symbols) {
    const std::size_t n = prefix_symbols.size();
    if (n == 0) throw std::invalid_argument("residual: empty prefix");
    const Poly g(w.field, std::vector<FieldElem>(prefix_symbols.begin(), prefix_symbols.end()));
    Poly acc = w.h.back().truncated(n);
    for (std::size_t i = w.h.size() - 1; i-- > 0;) acc = mul_trunc(acc, g, n) + w.h[i].truncated(n);
    return acc;
}

Poly residual(const SequenceSpec& spec, std::size_t n) {
    if (n == 0) throw std::invalid_argument("residual: N must be >= 1");
    return residual(witness(spec), prefix(spec, n));
}

std::optional<std::size_t> first_profile_violation(const Profile& profile) {
    std::size_t prev = 0;
    for (std::size_t n = 1; n <= profile.n_max(); ++n) {
        const std::size_t l = profile.at(n);
        if (l > n || l < prev || l > std::max(prev, n - prev)) return n;
        prev = l;
    }
    return std::nullopt;
}

} // namespace seqc
