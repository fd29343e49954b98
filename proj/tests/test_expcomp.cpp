#include <doctest.h>

#include <stdexcept>

#include "seqc/autoseq.hpp"
#include "seqc/expcomp.hpp"
#include "support.hpp"

using namespace seqc;

namespace {

const PrimeField F2(2);

// Least D <= d_max admitting a nonzero h of total degree <= D, by enumerating every h.
std::optional<std::uint32_t> brute_force(const std::vector<FieldElem>& u, std::uint32_t d_max) {
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

std::uint32_t total_degree(const std::vector<Monomial>& h) {
    std::uint32_t d = 0;
    for (const auto& m : h) d = std::max(d, m.i + m.j);
    return d;
}

} // namespace

TEST_CASE("small Thue-Morse cases") {
    const auto one = expansion_complexity(prefix(thue_morse(), 1), F2);
    CHECK(one.status == ExpansionStatus::zero_prefix);
    CHECK(one.e == 0u);
    CHECK(one.witness.empty());

    const auto two = expansion_complexity(prefix(thue_morse(), 2), F2);
    CHECK(two.status == ExpansionStatus::found);
    CHECK(two.e == 1u);
    CHECK(two.witness == std::vector<Monomial>{{0, 1, 1}, {1, 0, 1}});
    CHECK(std::string(status_name(two.status)) == "found");
}

TEST_CASE("Thue-Morse reaches 5 and stays there") {
    const auto prof = expansion_profile(prefix(thue_morse(), 64), F2);
    REQUIRE(prof.size() == 64);
    std::uint32_t prev = 0;
    std::optional<std::size_t> first_five;
    for (const auto& r : prof) {
        REQUIRE(r.e.has_value());
        REQUIRE(*r.e >= prev);
        prev = *r.e;
        if (*r.e == 5 && !first_five) first_five = r.n;
        const auto u = prefix(thue_morse(), r.n);
        if (r.status == ExpansionStatus::found) {
            REQUIRE(evaluate_witness(r.witness, u, F2).is_zero());
            REQUIRE(total_degree(r.witness) == *r.e);
        }
    }
    CHECK(prof.back().e == 5u);
    CHECK(first_five.has_value());
    CHECK(expansion_complexity(prefix(thue_morse(), 32), F2).e == 5u);
}

TEST_CASE("cap exceeded is its own outcome") {
    const auto r = expansion_complexity(prefix(thue_morse(), 64), F2, 3);
    CHECK(r.status == ExpansionStatus::cap_exceeded);
    CHECK_FALSE(r.e.has_value());
    CHECK(r.witness.empty());
    CHECK_THROWS_AS(expansion_complexity(prefix(thue_morse(), 4), F2, 0), std::invalid_argument);
    CHECK_THROWS_AS(expansion_complexity(std::vector<FieldElem>{}, F2), std::invalid_argument);
}

TEST_CASE("zero start keeps E at 0") {
    const std::vector<FieldElem> u{0, 0, 0, 0, 1, 1, 0};
    const auto prof = expansion_profile(u, F2);
    for (std::size_t n = 1; n <= 4; ++n) CHECK(prof[n - 1].e == 0u);
    CHECK(*prof[4].e > 0);
}

TEST_CASE("exhaustive agreement for N <= 6 and D <= 3") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
            std::vector<FieldElem> u(n);
            for (std::size_t i = 0; i < n; ++i) u[i] = (idx >> i) & 1u;
            const auto r = expansion_complexity(u, F2, 3);
            REQUIRE(r.e == brute_force(u, 3));
        }
    }
}

TEST_CASE("witness degrees bound E_N for the built-in sequences") {
    for (const auto& s : builtin_specs()) {
        CAPTURE(canonical_name(s));
        const auto w = witness(s);
        const auto u = prefix(s, 48);
        const auto r = expansion_complexity(u, field_of(s), static_cast<std::uint32_t>(w.total_degree()));
        REQUIRE(r.e.has_value());
        REQUIRE(*r.e <= w.total_degree());
        if (r.status == ExpansionStatus::found) REQUIRE(evaluate_witness(r.witness, u, field_of(s)).is_zero());
    }
    const auto pp = expansion_profile(prefix(perfect_profile(), 32), F2);
    CHECK(*pp.back().e <= 4);
}

TEST_CASE("odd characteristic search") {
    const PrimeField f3(3);
    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 40; ++iter) {
        const auto u = testing::random_symbols(rng, 1 + rng() % 20, 3);
        const auto r = expansion_complexity(u, f3, 5);
        if (r.status == ExpansionStatus::found) {
            REQUIRE(evaluate_witness(r.witness, u, f3).is_zero());
            REQUIRE_FALSE(r.witness.empty());
            REQUIRE(std::is_sorted(r.witness.begin(), r.witness.end(), [](const Monomial& a, const Monomial& b) {
                return std::pair(a.i, a.j) < std::pair(b.i, b.j);
            }));
        }
    }
}
