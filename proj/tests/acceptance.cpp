// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "seqc/autoseq.hpp"
#include "seqc/contfrac.hpp"
#include "seqc/expcomp.hpp"
#include "seqc/lincomp.hpp"
#include "seqc/theory.hpp"

using namespace seqc;

namespace {

const PrimeField F2(2);

struct Outcome {
    bool pass = true;
    std::string detail;

    bool fail(std::string why) {
        if (pass) detail = std::move(why);
        pass = false;
        return false;
    }
};

std::string at(const std::string& what, std::size_t n) { return what + " at N = " + std::to_string(n); }

Profile bm(const SequenceSpec& s, std::size_t n) { return bm_profile(prefix(s, n), field_of(s)); }

Outcome c1_thue_morse() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const Profile prof = bm(thue_morse(), 4096);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (std::size_t n = 1; n <= 4096; ++n) {
        if (static_cast<std::int64_t>(prof.at(n)) != 2 * ((static_cast<std::int64_t>(n) + 2) / 4)) return o.fail(at("profile mismatch", n)), o;
    }
    if (secs >= 5.0) o.fail("runtime " + std::to_string(secs) + " s");
    else o.detail = "runtime " + std::to_string(secs) + " s";
    return o;
}

Outcome c2_all_ones() {
    Outcome o;
    std::size_t upper_branch = 0, lower_branch = 0;
    for (std::uint32_t k = 1; k <= 4; ++k) {
        const Profile prof = bm(pattern(2, k, (1u << k) - 1), 4096);
        const std::int64_t t = (std::int64_t{1} << k) - 1;
        for (std::int64_t n = 1; n <= 4096; ++n) {
            const std::int64_t r = n % (4 * t);
            ((std::int64_t{1} << k) <= r && r <= 3 * t ? upper_branch : lower_branch) += 1;
            if (static_cast<std::int64_t>(prof.at(static_cast<std::size_t>(n))) != allones_exact(k, n))
                return o.fail(at("k = " + std::to_string(k) + " mismatch", static_cast<std::size_t>(n))), o;
        }
    }
    o.detail = "branch hits " + std::to_string(upper_branch) + " / " + std::to_string(lower_branch);
    if (upper_branch < 100 || lower_branch < 100) o.fail(o.detail);
    return o;
}

Outcome c3_oracle() {
    Outcome o;
    for (const auto& s : builtin_specs()) {
        const auto u = prefix(s, 4096);
        if (profile_from_cf(series_from_prefix(u, field_of(s)), 4096) != bm_profile(u, field_of(s)))
            return o.fail(canonical_name(s) + " diverges"), o;
    }
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<FieldElem> bit(0, 1);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<FieldElem> u(256);
        for (auto& x : u) x = bit(rng);
        if (profile_from_cf(series_from_prefix(u, F2), 256) != bm_profile(u, F2))
            return o.fail("random prefix " + std::to_string(iter) + " diverges"), o;
    }
    o.detail = std::to_string(builtin_specs().size()) + " built-ins, 200 random prefixes";
    return o;
}

// (N - M)/d <= L <= ((d-1)N + M + 1)/d by cross-multiplication.
bool within(std::int64_t l, std::int64_t n, std::int64_t d, std::int64_t m) {
    return n - m <= d * l && d * l <= (d - 1) * n + m + 1;
}

Outcome c4_bounds() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& s : builtin_specs()) {
        const Profile prof = bm(s, 4096);
        for (const auto& w : witnesses(s)) {
            ++checked;
            for (std::size_t n = 1; n <= 4096; ++n) {
                const auto l = static_cast<std::int64_t>(prof.at(n));
                const auto nn = static_cast<std::int64_t>(n);
                if (!within(l, nn, w.d, w.m) || !general_bounds(w.d, w.m, nn).contains(l))
                    return o.fail(at(canonical_name(s) + " [" + w.label + "]", n)), o;
            }
        }
    }
    const Profile tm = bm(thue_morse(), 4096);
    for (std::size_t n = 1; n <= 4096; ++n) {
        const auto nn = static_cast<std::int64_t>(n);
        const BoundPair b = general_bounds(2, 1, nn);
        const std::int64_t want = (n % 4 <= 1) ? b.lower.ceil() : b.upper.floor();
        if (static_cast<std::int64_t>(tm.at(n)) != want) return o.fail(at("Thue-Morse attainment", n)), o;
    }
    o.detail = std::to_string(checked) + " witnesses";
    return o;
}

Outcome c5_odd_primes() {
    Outcome o;
    for (std::int64_t p : {3, 5}) {
        const Profile prof = bm(sum_of_digits(static_cast<std::uint32_t>(p)), 2048);
        for (std::int64_t n = 1; n <= 2048; ++n) {
            const auto l = static_cast<std::int64_t>(prof.at(static_cast<std::size_t>(n)));
            if (!(n - 1 <= p * l && p * l <= (p - 1) * n + 2))
                return o.fail(at("sum-of-digits p = " + std::to_string(p), static_cast<std::size_t>(n))), o;
        }
    }
    for (std::uint64_t a : {4u, 8u}) {
        const std::int64_t p = 3, pk = 9;
        const Profile prof = bm(pattern(3, 2, a), 2048);
        for (std::int64_t n = 1; n <= 2048; ++n) {
            const auto l = static_cast<std::int64_t>(prof.at(static_cast<std::size_t>(n)));
            if (!(n - pk + 1 <= p * l && p * l <= (p - 1) * n + pk))
                return o.fail(at("pattern a = " + std::to_string(a), static_cast<std::size_t>(n))), o;
        }
    }
    return o;
}

Outcome c6_cf_structure() {
    Outcome o;
    std::size_t total = 0;
    for (std::uint32_t k = 1; k <= 4; ++k) {
        const CFExpansion cf = cf_expand(series_from_prefix(prefix(all_ones_pattern(k), 4096), F2));
        const std::string tag = "k = " + std::to_string(k);
        if (cf.reliable_count < 8) return o.fail(tag + ": too few quotients"), o;
        if (!cf.quotients[0].is_zero()) return o.fail(tag + ": nonzero A_0"), o;
        for (std::size_t j = 1; j <= cf.reliable_count; ++j) {
            if (cf.quotients[j] != cf_prediction(k, j)) return o.fail(tag + ": A_" + std::to_string(j)), o;
        }
        const CongruenceReport rep = q_congruences(cf, k);
        if (!rep.ok()) return o.fail(tag + ": " + rep.detail), o;
        const auto conv = convergents(cf);
        std::int64_t sum = 0;
        for (std::size_t j = 1; j < conv.size(); ++j) {
            sum += cf.quotients[j].degree_or_minus_one();
            if (conv[j].q.degree_or_minus_one() != sum) return o.fail(tag + ": deg Q_" + std::to_string(j)), o;
            if (conv[j - 1].p * conv[j].q + conv[j].p * conv[j - 1].q != Poly::constant(F2, 1))
                return o.fail(tag + ": determinant at j = " + std::to_string(j)), o;
        }
        total += cf.reliable_count;
    }
    o.detail = std::to_string(total) + " quotients";
    return o;
}

std::optional<std::uint32_t> brute_force_e(const std::vector<FieldElem>& u, std::uint32_t d_max) {
    if (std::all_of(u.begin(), u.end(), [](FieldElem x) { return x == 0; })) return 0;
    for (std::uint32_t d = 1; d <= d_max; ++d) {
        std::vector<Monomial> monos;
        for (std::uint32_t i = 0; i <= d; ++i) {
            for (std::uint32_t j = 0; i + j <= d; ++j) monos.push_back({i, j, 1});
        }
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << monos.size()); ++mask) {
            std::vector<Monomial> h;
            for (std::size_t b = 0; b < monos.size(); ++b) {
                if ((mask >> b) & 1u) h.push_back(monos[b]);
            }
            if (evaluate_witness(h, u, F2).is_zero()) return d;
        }
    }
    return std::nullopt;
}

Outcome c7_expansion() {
    Outcome o;
    const auto tm = prefix(thue_morse(), 64);
    const auto prof = expansion_profile(tm, F2);
    std::uint32_t prev = 0;
    std::optional<std::size_t> plateau;
    for (const auto& r : prof) {
        if (!r.e) return o.fail(at("no value", r.n)), o;
        if (*r.e < prev) return o.fail(at("decrease", r.n)), o;
        if (*r.e == 5 && !plateau) plateau = r.n;
        prev = *r.e;
        if (r.status == ExpansionStatus::found) {
            const std::vector<FieldElem> u(tm.begin(), tm.begin() + static_cast<std::ptrdiff_t>(r.n));
            if (!evaluate_witness(r.witness, u, F2).is_zero()) return o.fail(at("witness fails", r.n)), o;
        }
    }
    if (prof.back().e != 5u) return o.fail("E_64 = " + std::to_string(prof.back().e.value_or(0))), o;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
            std::vector<FieldElem> u(n);
            for (std::size_t i = 0; i < n; ++i) u[i] = (idx >> i) & 1u;
            if (expansion_complexity(u, F2, 3).e != brute_force_e(u, 3)) return o.fail(at("brute force disagrees", n)), o;
        }
    }
    o.detail = "E = 5 from N = " + std::to_string(plateau.value_or(0));
    return o;
}

Outcome c8_residuals() {
    Outcome o;
    for (const auto& s : builtin_specs()) {
        if (!residual(s, 1024).is_zero()) return o.fail(canonical_name(s) + " residual nonzero"), o;
    }
    for (std::uint32_t k = 1; k <= 4; ++k) {
        const LaurentSeries res = all_ones_functional_residual(series_from_prefix(prefix(all_ones_pattern(k), 1024), F2), k);
        if (!res.is_zero()) return o.fail("functional equation k = " + std::to_string(k)), o;
    }
    return o;
}

Outcome c9_perfect() {
    Outcome o;
    const auto u = prefix(perfect_profile(), 4096);
    const Profile prof = bm_profile(u, F2);
    for (std::size_t n = 1; n <= 4096; ++n) {
        if (prof.at(n) != (n + 1) / 2) return o.fail(at("profile mismatch", n)), o;
    }
    const CFExpansion cf = cf_expand(series_from_prefix(u, F2));
    for (std::size_t j = 1; j < cf.size(); ++j) {
        if (cf.quotients[j].degree_or_minus_one() != 1) return o.fail("deg A_" + std::to_string(j)), o;
    }
    o.detail = std::to_string(cf.size() - 1) + " unit quotients";
    return o;
}

Outcome c10_negative_control() {
    Outcome o;
    std::ostringstream out, err;
    const int code = cli::run({"verify", "--seq", "thue-morse", "--nmax", "1024", "--inject-fault", "700"}, out, err);
    if (code == 0) return o.fail("verify accepted a corrupted prefix"), o;
    if (err.str().find("first failing N = 700") == std::string::npos) return o.fail("first failing N not reported as 700"), o;
    o.detail = "exit " + std::to_string(code) + ", first failing N = 700";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"C1 Thue-Morse profile", c1_thue_morse},
        {"C2 all-one pattern profiles", c2_all_ones},
        {"C3 continued fraction vs Berlekamp-Massey", c3_oracle},
        {"C4 witness bounds and attainment", c4_bounds},
        {"C5 odd prime bounds", c5_odd_primes},
        {"C6 partial quotient structure", c6_cf_structure},
        {"C7 expansion complexity", c7_expansion},
        {"C8 functional residuals", c8_residuals},
        {"C9 perfect profile", c9_perfect},
        {"C10 corrupted prefix is rejected", c10_negative_control},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s %s%s%s\n", o.pass ? "PASS" : "FAIL", name, o.detail.empty() ? "" : ": ", o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
