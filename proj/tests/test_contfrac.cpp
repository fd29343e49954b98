#include <doctest.h>

#include <stdexcept>

#include "seqc/contfrac.hpp"
#include "seqc/lincomp.hpp"
#include "support.hpp"

using namespace seqc;

namespace {

const PrimeField F2(2);

LaurentSeries series_of(const SequenceSpec& s, std::size_t n) { return series_from_prefix(prefix(s, n), field_of(s)); }

} // namespace

TEST_CASE("Thue-Morse partial quotients") {
    const CFExpansion cf = cf_expand(series_of(thue_morse(), 64));
    REQUIRE(cf.reliable_count >= 10);
    CHECK(cf.quotients[0].is_zero());
    CHECK(cf.quotients[1] == Poly(F2, {1, 1, 1}));
    for (std::size_t j = 2; j <= cf.reliable_count; ++j) CHECK(cf.quotients[j] == Poly(F2, {1, 0, 1}));
    for (std::size_t j = 1; j < cf.q_degrees.size(); ++j) CHECK(cf.q_degrees[j] == static_cast<std::int64_t>(2 * j));
    CHECK(cf.reliable_count == 16);
}

TEST_CASE("Rudin-Shapiro partial quotients") {
    const CFExpansion cf = cf_expand(series_of(rudin_shapiro(), 64));
    REQUIRE(cf.reliable_count >= 4);
    CHECK(cf.quotients[1] == Poly(F2, {0, 1, 0, 0, 1}));
    for (std::size_t j = 2; j <= cf.reliable_count; ++j) {
        CHECK(cf.quotients[j] == (j % 2 == 0 ? Poly(F2, {1, 0, 1}) : Poly(F2, {1, 0, 0, 0, 1})));
    }
    const auto conv = convergents(cf);
    CHECK(conv[1].q.degree_or_minus_one() == 4);
    CHECK(conv[2].q.degree_or_minus_one() == 6);
    CHECK(conv[3].q.degree_or_minus_one() == 10);
    CHECK(conv[4].q.degree_or_minus_one() == 12);
}

TEST_CASE("rational input has a finite expansion") {
    const LaurentSeries r = series_from_prefix(std::vector<FieldElem>(16, 1), F2);
    const CFExpansion cf = cf_expand(r);
    REQUIRE(cf.size() == 2);
    CHECK(cf.quotients[0].is_zero());
    CHECK(cf.quotients[1] == Poly::linear(F2, 1));
    CHECK(cf_expand_by_inversion(r).size() == 2);

    const LaurentSeries exact = LaurentSeries::from_coeffs(F2, 2, {1, 0, 1}, 5);
    const CFExpansion poly_cf = cf_expand(exact);
    CHECK(poly_cf.terminated);
    CHECK(poly_cf.size() == 1);
    CHECK(poly_cf.quotients[0] == Poly(F2, {1, 0, 1}));

    CHECK_THROWS_AS(cf_expand(LaurentSeries::zero(F2, 8)), std::domain_error);
}

TEST_CASE("degree-certified quotients versus fully determined ones") {
    // Known: x^-4. Its A_1 has degree 4 whatever follows, but A_1 = x^4 only for a zero tail.
    const LaurentSeries r = series_from_prefix(std::vector<FieldElem>{0, 0, 0, 1}, F2);
    const CFExpansion cf = cf_expand(r);
    REQUIRE(cf.size() == 2);
    CHECK(cf.q_degrees[1] == 4);
    CHECK(cf.reliable_count == 0);
    const CFExpansion longer = cf_expand(series_from_prefix(std::vector<FieldElem>{0, 0, 0, 1, 1, 1, 1, 1, 1}, F2));
    CHECK(longer.quotients[1].degree_or_minus_one() == 4);
    CHECK(longer.quotients[1] != cf.quotients[1]);
    CHECK(bm_profile(std::vector<FieldElem>{0, 0, 0, 1}, F2) == profile_from_cf(r, 4));
}

TEST_CASE("convergent recursion seeds") {
    const CFExpansion cf = cf_expand(series_of(thue_morse(), 32));
    const auto conv = convergents(cf);
    CHECK(conv[0].q == Poly::constant(F2, 1));
    CHECK(conv[0].p == cf.quotients[0]);
    CHECK(conv[1].q == cf.quotients[1]);
    CHECK(convergents(cf, 3).size() == 3);
    for (std::size_t j = 1; j < conv.size(); ++j) CHECK(conv[j].q.degree_or_minus_one() == static_cast<std::int64_t>(2 * j));
}

TEST_CASE("profiles from denominators") {
    using V = std::vector<std::size_t>;
    CHECK(profile_from_cf(series_of(thue_morse(), 12), 12).values == V{0, 2, 2, 2, 2, 4, 4, 4, 4, 6, 6, 6});
    const Profile pp = profile_from_cf(series_of(perfect_profile(), 500), 500);
    for (std::size_t n = 1; n <= 500; ++n) REQUIRE(pp.at(n) == (n + 1) / 2);
    const CFExpansion pcf = cf_expand(series_of(perfect_profile(), 500));
    for (std::size_t j = 1; j < pcf.size(); ++j) REQUIRE(pcf.quotients[j].degree_or_minus_one() == 1);

    CHECK(profile_from_cf(series_from_prefix(std::vector<FieldElem>(9, 0), F2), 9).values == V(9, 0));
    CHECK(profile_from_cf(series_of(thue_morse(), 40), 20) == bm_profile(prefix(thue_morse(), 20), F2));
    CHECK_THROWS_AS(profile_from_cf(series_of(thue_morse(), 10), 11), std::domain_error);
}

TEST_CASE("oracle equivalence with Berlekamp-Massey") {
    for (const auto& s : builtin_specs()) {
        CAPTURE(canonical_name(s));
        const auto u = prefix(s, 4096);
        REQUIRE(profile_from_cf(series_from_prefix(u, field_of(s)), 4096) == bm_profile(u, field_of(s)));
    }
    std::mt19937_64 rng(256);
    for (int iter = 0; iter < 200; ++iter) {
        const auto u = testing::random_symbols(rng, 256, 2);
        REQUIRE(profile_from_cf(series_from_prefix(u, F2), 256) == bm_profile(u, F2));
    }
    for (std::uint32_t p : {3u, 5u, 7919u}) {
        const PrimeField f(p);
        for (int iter = 0; iter < 50; ++iter) {
            auto u = testing::random_symbols(rng, 1 + rng() % 200, p);
            // Sparse prefixes give long quotients.
            if (iter % 3 == 0) {
                for (auto& x : u) x = rng() % 5 == 0 ? x : 0;
            }
            REQUIRE(profile_from_cf(series_from_prefix(u, f), u.size()) == bm_profile(u, f));
        }
    }
}

TEST_CASE("inversion recursion reproduces the determined quotients") {
    std::mt19937_64 rng(9);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const PrimeField f(p);
        for (int iter = 0; iter < 150; ++iter) {
            auto u = testing::random_symbols(rng, 1 + rng() % 120, p);
            if (iter % 4 == 0) {
                for (auto& x : u) x = rng() % 4 == 0 ? x : 0;
            }
            const LaurentSeries r = series_from_prefix(u, f);
            if (r.is_zero()) continue;
            const CFExpansion cf = cf_expand(r);
            const auto inv = cf_expand_by_inversion(r);
            REQUIRE(inv.size() == cf.reliable_count + 1);
            for (std::size_t j = 0; j < inv.size(); ++j) REQUIRE(inv[j] == cf.quotients[j]);
        }
    }
    const LaurentSeries tm = series_of(thue_morse(), 200);
    const auto inv = cf_expand_by_inversion(tm);
    CHECK(inv.size() == cf_expand(tm).reliable_count + 1);
}

TEST_CASE("convergent identities and approximation order") {
    std::mt19937_64 rng(31);
    for (std::uint32_t p : {2u, 3u, 11u}) {
        const PrimeField f(p);
        for (int iter = 0; iter < 60; ++iter) {
            const auto u = testing::random_symbols(rng, 4 + rng() % 100, p);
            const LaurentSeries r = series_from_prefix(u, f);
            if (r.is_zero()) continue;
            const CFExpansion cf = cf_expand(r);
            const auto conv = convergents(cf);
            std::int64_t sum = 0;
            for (std::size_t j = 1; j < conv.size(); ++j) {
                REQUIRE(cf.quotients[j].degree_or_minus_one() >= 1);
                sum += cf.quotients[j].degree_or_minus_one();
                REQUIRE(conv[j].q.degree_or_minus_one() == sum);
                const Poly det = conv[j - 1].p * conv[j].q - conv[j].p * conv[j - 1].q;
                REQUIRE(det.size() == 1);
                REQUIRE((det[0] == 1 || det[0] == p - 1));
                if (p == 2) REQUIRE(conv[j - 1].p * conv[j].q + conv[j].p * conv[j - 1].q == Poly::constant(f, 1));
                // v(Q_{j-1} R - P_{j-1}) = -deg Q_j
                const std::int64_t big = r.precision() + 64;
                const LaurentSeries err =
                    LaurentSeries::from_poly(conv[j - 1].q, big) * r - LaurentSeries::from_poly(conv[j - 1].p, big);
                REQUIRE(-cf.q_degrees[j] >= -err.precision());
                REQUIRE(valuation(err) == Valuation(-cf.q_degrees[j]));
            }
        }
    }
}

TEST_CASE("periodicity of Q U^(2^k)") {
    const PeriodicityCheck c = q_times_u_power_reconstruction(Poly(F2, {1, 0, 1}), 2);
    CHECK(c.periodic);
    CHECK(c.reconstructed == Poly(F2, {1, 0, 1}));
    CHECK(c.expected == Poly(F2, {1, 0, 1}));
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 50; ++iter) {
        const Poly q = testing::random_poly(rng, F2, 60);
        for (std::uint32_t k = 1; k <= 4; ++k) {
            const PeriodicityCheck pc = q_times_u_power_reconstruction(q, k);
            REQUIRE(pc.periodic);
            REQUIRE(pc.reconstructed == pc.expected);
        }
    }
}

TEST_CASE("denominator congruences for all-one patterns") {
    for (std::uint32_t k = 1; k <= 4; ++k) {
        CAPTURE(k);
        const CFExpansion cf = cf_expand(series_of(all_ones_pattern(k), 1024));
        const CongruenceReport rep = q_congruences(cf, k);
        CHECK(rep.ok());
        CHECK(rep.checked == cf.reliable_count + 1);
    }
    const CFExpansion tm = cf_expand(series_of(thue_morse(), 128));
    for (const auto& c : convergents(tm, tm.reliable_count + 1)) CHECK(c.q.evaluate(1) == 1);
    const CFExpansion rs = cf_expand(series_of(rudin_shapiro(), 64));
    CHECK(divmod(convergents(rs)[1].q, Poly(F2, {1, 0, 1})).remainder == Poly::linear(F2, 1));

    // A flipped symbol breaks them.
    auto u = prefix(thue_morse(), 256);
    u[60] ^= 1u;
    CHECK_FALSE(q_congruences(cf_expand(series_from_prefix(u, F2)), 1).ok());
    CHECK_THROWS_AS(q_congruences(cf_expand(series_of(sum_of_digits(3), 32)), 1), std::invalid_argument);
}

TEST_CASE("all-one functional equation") {
    for (std::uint32_t k = 1; k <= 4; ++k) {
        CAPTURE(k);
        const LaurentSeries res = all_ones_functional_residual(series_of(all_ones_pattern(k), 1024), k);
        CHECK(res.is_zero());
        CHECK(res.precision() >= 1000);
        const LaurentSeries wrong = all_ones_functional_residual(series_of(all_ones_pattern(k), 1024), k == 4 ? 1 : k + 1);
        CHECK_FALSE(wrong.is_zero());
    }
}
