#include <doctest.h>

#include <stdexcept>

#include "seqc/kernels.hpp"
#include "seqc/lincomp.hpp"
#include "support.hpp"

using namespace seqc;

namespace {

const PrimeField F2(2);

// Smallest L for which some u_{n+L} = sum c_i u_{n+i} holds on the whole prefix,
// by trying every coefficient vector.
std::size_t brute_force_complexity(const std::vector<FieldElem>& u, const PrimeField& f) {
    const std::size_t n = u.size();
    for (std::size_t len = 0; len < n; ++len) {
        std::vector<FieldElem> c(len, 0);
        for (;;) {
            bool ok = true;
            for (std::size_t s = 0; s + len < n && ok; ++s) {
                FieldElem v = 0;
                for (std::size_t i = 0; i < len; ++i) v = f.add(v, f.mul(c[i], u[s + i]));
                ok = v == u[s + len];
            }
            if (ok) return len;
            std::size_t i = 0;
            while (i < len && c[i] == f.p() - 1) c[i++] = 0;
            if (i == len) break;
            ++c[i];
        }
    }
    return n;
}

std::vector<FieldElem> from_index(std::uint64_t idx, std::size_t n, std::uint32_t p) {
    std::vector<FieldElem> u(n);
    for (auto& x : u) {
        x = static_cast<FieldElem>(idx % p);
        idx /= p;
    }
    return u;
}

} // namespace

TEST_CASE("profiles of worked prefixes") {
    using V = std::vector<std::size_t>;
    CHECK(bm_profile(std::vector<FieldElem>{0, 0, 0, 1}, F2).values == V{0, 0, 0, 4});
    CHECK(bm_profile(std::vector<FieldElem>(5, 0), F2).values == V{0, 0, 0, 0, 0});
    CHECK(bm_profile(prefix(thue_morse(), 12), F2).values == V{0, 2, 2, 2, 2, 4, 4, 4, 4, 6, 6, 6});
    CHECK(bm_profile(prefix(perfect_profile(), 8), F2).values == V{1, 1, 2, 2, 3, 3, 4, 4});
    CHECK_THROWS_AS(bm_profile(std::vector<FieldElem>{}, F2), std::invalid_argument);
    CHECK_THROWS_AS(bm_profile(std::vector<FieldElem>{0, 2}, F2), std::invalid_argument);
}

TEST_CASE("connection polynomials regenerate the prefix") {
    const std::vector<FieldElem> w{1, 0, 1, 1, 1, 0, 1, 0};
    const Recurrence r = bm_connection(w, F2);
    CHECK(r.length == 4);
    CHECK(r.replay(w, w.size(), F2) == w);

    const std::vector<FieldElem> z{0, 1};
    const Recurrence rz = bm_connection(z, F2);
    CHECK(rz.length == 2);
    CHECK(rz.replay(z, 2, F2) == z);

    const std::vector<FieldElem> ones{1, 1, 1, 1};
    const Recurrence r1 = bm_connection(ones, F2);
    CHECK(r1.length == 1);
    CHECK(r1.coeffs == std::vector<FieldElem>{1});

    std::mt19937_64 rng(5);
    for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
        const PrimeField f(p);
        for (int iter = 0; iter < 100; ++iter) {
            const auto u = testing::random_symbols(rng, 1 + rng() % 200, p);
            const Recurrence rec = bm_connection(u, f);
            REQUIRE(rec.length == bm_profile(u, f).values.back());
            REQUIRE(rec.replay(u, u.size(), f) == u);
        }
    }
}

TEST_CASE("exhaustive minimality over F_2 for N <= 10") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
            const auto u = from_index(idx, n, 2);
            REQUIRE(bm_profile(u, F2).values.back() == brute_force_complexity(u, F2));
        }
    }
}

TEST_CASE("minimality on random prefixes of length 12 and over F_3") {
    std::mt19937_64 rng(12);
    for (int iter = 0; iter < 300; ++iter) {
        const auto u = testing::random_symbols(rng, 12, 2);
        const auto prof = bm_profile(u, F2);
        for (std::size_t n = 1; n <= 12; ++n) {
            REQUIRE(prof.at(n) == brute_force_complexity(std::vector<FieldElem>(u.begin(), u.begin() + n), F2));
        }
    }
    const PrimeField f3(3);
    for (std::size_t n = 1; n <= 6; ++n) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 3;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            const auto u = from_index(idx, n, 3);
            REQUIRE(bm_profile(u, f3).values.back() == brute_force_complexity(u, f3));
        }
    }
}

TEST_CASE("profile invariants and kernel independence") {
    std::mt19937_64 rng(77);
    for (std::uint32_t p : {2u, 3u, 65537u}) {
        const PrimeField f(p);
        for (int iter = 0; iter < 40; ++iter) {
            const auto u = testing::random_symbols(rng, 1 + rng() % 700, p);
            const Profile prof = bm_profile(u, f);
            REQUIRE_FALSE(first_profile_violation(prof).has_value());
            for (kernels::Isa isa : kernels::available_isas()) {
                kernels::ScopedIsa scope(isa);
                REQUIRE(bm_profile(u, f) == prof);
            }
        }
    }
    const auto tm = prefix(thue_morse(), 4096);
    Profile ref;
    {
        kernels::ScopedIsa scope(kernels::Isa::scalar);
        ref = bm_profile(tm, F2);
    }
    CHECK(bm_profile(tm, F2) == ref);
}
