#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "seqc/contfrac.hpp"
#include "seqc/laurent.hpp"
#include "seqc/lincomp.hpp"
#include "seqc/theory.hpp"

namespace seqc {
namespace {

void run_all(std::vector<std::function<void()>>& tasks) {
    const unsigned workers = std::min<unsigned>(worker_threads(), static_cast<unsigned>(tasks.size()));
    if (workers <= 1) {
        for (auto& t : tasks) t();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
                try {
                    tasks[i]();
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

CheckResult fail(std::string name, std::int64_t n, std::string expected, std::string actual) {
    return {std::move(name), false, n, std::move(expected), std::move(actual)};
}

CheckResult pass(std::string name) { return {std::move(name), true, std::nullopt, {}, {}}; }

CheckResult residual_check(const AlgebraicWitness& w, std::span<const FieldElem> prefix) {
    const std::string name = "residual[" + w.label + "]";
    const Poly r = residual(w, prefix);
    for (std::size_t e = 0; e < r.size(); ++e) {
        if (r[e] != 0) {
            return fail(name, static_cast<std::int64_t>(e + 1), "h(G,t) = 0 mod t^N",
                        "coefficient " + std::to_string(r[e]) + " at t^" + std::to_string(e));
        }
    }
    return pass(name);
}

template <class F>
CheckResult profile_check(std::string name, const Profile& prof, F expected) {
    for (std::size_t n = 1; n <= prof.n_max(); ++n) {
        const auto want = static_cast<std::int64_t>(expected(static_cast<std::int64_t>(n)));
        const auto got = static_cast<std::int64_t>(prof.at(n));
        if (want != got) return fail(std::move(name), static_cast<std::int64_t>(n), std::to_string(want), std::to_string(got));
    }
    return pass(std::move(name));
}

CheckResult bounds_check(const AlgebraicWitness& w, const Profile& prof) {
    std::string name = "bounds[" + w.label + "]";
    if (!w.no_rational_zero) name += " (conditional on no rational zero)";
    for (std::size_t n = 1; n <= prof.n_max(); ++n) {
        const BoundPair b = general_bounds(w.d, w.m, static_cast<std::int64_t>(n));
        const auto l = static_cast<std::int64_t>(prof.at(n));
        if (!b.contains(l)) {
            return fail(name, static_cast<std::int64_t>(n),
                        std::to_string(b.lower.num) + "/" + std::to_string(b.lower.den) + " <= L <= " +
                            std::to_string(b.upper.num) + "/" + std::to_string(b.upper.den),
                        std::to_string(l));
        }
    }
    return pass(name);
}

// Lower bound exactly at N = 0, 1 mod 4 and upper bound exactly at N = 2, 3 mod 4.
CheckResult attainment_check(const Profile& prof) {
    for (std::size_t n = 1; n <= prof.n_max(); ++n) {
        const auto nn = static_cast<std::int64_t>(n);
        const auto l = static_cast<std::int64_t>(prof.at(n));
        const std::int64_t lower = nn / 2;  // ceil((N-1)/2)
        const std::int64_t upper = nn / 2 + 1;
        const bool low_class = nn % 4 <= 1;
        if ((l == lower) != low_class || (l == upper) == low_class) {
            return fail("bound_attainment", nn, low_class ? "L = " + std::to_string(lower) : "L = " + std::to_string(upper),
                        std::to_string(l));
        }
    }
    return pass("bound_attainment");
}

// Shortest prefix that fixes deg A_j.
std::int64_t quotient_n(const CFExpansion& cf, std::size_t j) {
    return j == 0 ? 0 : cf.q_degrees[j - 1] + cf.q_degrees[j];
}

// Shortest prefix that fixes A_j itself.
std::int64_t reliable_n(const CFExpansion& cf, std::size_t j) { return 2 * cf.q_degrees[j]; }

CheckResult prediction_check(const CFExpansion& cf, std::uint32_t k) {
    for (std::size_t j = 1; j <= cf.reliable_count; ++j) {
        const Poly want = cf_prediction(k, j);
        if (cf.quotients[j] != want) {
            return fail("cf_predictions", reliable_n(cf, j), "A_" + std::to_string(j) + " = " + want.to_string(),
                        cf.quotients[j].to_string());
        }
    }
    return pass("cf_predictions");
}

CheckResult congruence_check(const CFExpansion& cf, std::uint32_t k) {
    const CongruenceReport rep = q_congruences(cf, k);
    if (rep.ok()) return pass("q_congruences");
    return fail("q_congruences", reliable_n(cf, *rep.first_failure), "congruences hold", rep.detail);
}

CheckResult convergent_check(const CFExpansion& cf) {
    const auto conv = convergents(cf);
    const FieldElem minus_one = cf.field.neg(1);
    std::int64_t degree_sum = 0;
    for (std::size_t j = 0; j < conv.size(); ++j) {
        if (j > 0) degree_sum += cf.quotients[j].degree_or_minus_one();
        if (conv[j].q.degree_or_minus_one() != degree_sum) {
            return fail("convergent_identities", quotient_n(cf, j), "deg Q_" + std::to_string(j) + " = " + std::to_string(degree_sum),
                        std::to_string(conv[j].q.degree_or_minus_one()));
        }
        if (j == 0) continue;
        const Poly det = conv[j - 1].p * conv[j].q - conv[j].p * conv[j - 1].q;
        const bool unit = det.size() == 1 && (det[0] == 1 || det[0] == minus_one);
        if (!unit) {
            return fail("convergent_identities", quotient_n(cf, j), "P_{j-1}Q_j - P_jQ_{j-1} = +-1 at j = " + std::to_string(j),
                        det.to_string());
        }
    }
    return pass("convergent_identities");
}

CheckResult unit_degree_check(const CFExpansion& cf) {
    for (std::size_t j = 1; j < cf.quotients.size(); ++j) {
        if (cf.quotients[j].degree_or_minus_one() != 1) {
            return fail("cf_unit_degrees", quotient_n(cf, j), "deg A_" + std::to_string(j) + " = 1",
                        std::to_string(cf.quotients[j].degree_or_minus_one()));
        }
    }
    return pass("cf_unit_degrees");
}

} // namespace

unsigned worker_threads() {
    if (const char* env = std::getenv("SEQC_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

bool VerifyReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::optional<std::int64_t> VerifyReport::first_failure() const noexcept {
    std::optional<std::int64_t> best;
    for (const auto& c : checks) {
        if (!c.pass && c.first_fail_n && (!best || *c.first_fail_n < *best)) best = c.first_fail_n;
    }
    return best;
}

VerifyReport verify_prefix(const SequenceSpec& spec, std::span<const FieldElem> prefix) {
    validate(spec);
    if (prefix.size() < 4) throw std::invalid_argument("verification needs at least 4 terms");
    const PrimeField field = field_of(spec);
    const auto ws = witnesses(spec);
    const auto k = all_ones_length(spec);
    const bool is_tm = spec == thue_morse();
    const bool is_perfect = std::holds_alternative<PerfectProfileSeq>(spec);

    Profile bm, cf_profile;
    std::optional<CFExpansion> cf;
    std::vector<CheckResult> residuals(ws.size());
    const LaurentSeries r = series_from_prefix(prefix, field);

    std::vector<std::function<void()>> stage1{
        [&] { bm = bm_profile(prefix, field); },
        [&] { cf_profile = profile_from_cf(r, prefix.size()); },
        [&] {
            if (!r.is_zero()) cf = cf_expand(r);
        },
    };
    for (std::size_t i = 0; i < ws.size(); ++i) stage1.push_back([&, i] { residuals[i] = residual_check(ws[i], prefix); });
    run_all(stage1);

    VerifyReport rep;
    rep.spec = canonical_name(spec);
    rep.n_max = prefix.size();
    for (auto& c : residuals) rep.checks.push_back(std::move(c));
    rep.checks.push_back(profile_check("bm_vs_cf", cf_profile, [&](std::int64_t n) { return bm.at(static_cast<std::size_t>(n)); }));
    if (const auto bad = first_profile_violation(bm)) {
        rep.checks.push_back(fail("profile_invariants", static_cast<std::int64_t>(*bad), "0 <= L(N) <= N, BM jump rule",
                                  std::to_string(bm.at(*bad))));
    } else {
        rep.checks.push_back(pass("profile_invariants"));
    }

    std::vector<CheckResult> stage2(ws.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t i = 0; i < ws.size(); ++i) tasks.push_back([&, i] { stage2[i] = bounds_check(ws[i], bm); });
    auto add = [&](auto fn) {
        stage2.emplace_back();
        const std::size_t slot = stage2.size() - 1;
        tasks.push_back([&stage2, slot, fn] { stage2[slot] = fn(); });
    };
    if (is_tm) {
        add([&] { return profile_check("thue_morse_formula", bm, thue_morse_exact); });
        add([&] { return attainment_check(bm); });
    }
    if (k) {
        const std::uint32_t kk = *k;
        add([&, kk] { return profile_check("allones_formula", bm, [kk](std::int64_t n) { return allones_exact(kk, n); }); });
    }
    if (is_perfect) add([&] { return profile_check("perfect_formula", bm, perfect_profile_exact); });
    if (cf) {
        const CFExpansion& e = *cf;
        add([&e] { return convergent_check(e); });
        if (k) {
            const std::uint32_t kk = *k;
            add([&e, kk] { return prediction_check(e, kk); });
            add([&e, kk] { return congruence_check(e, kk); });
        }
        if (is_perfect) add([&e] { return unit_degree_check(e); });
    }
    run_all(tasks);
    for (auto& c : stage2) rep.checks.push_back(std::move(c));
    return rep;
}

VerifyReport verify(const SequenceSpec& spec, std::size_t n_max) {
    validate(spec);
    return verify_prefix(spec, prefix(spec, n_max));
}

std::vector<SequenceSpec> verification_suite(std::uint32_t k_max) {
    std::vector<SequenceSpec> out = builtin_specs();
    for (std::uint32_t k = 1; k <= k_max; ++k) {
        SequenceSpec s = all_ones_pattern(k);
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    return out;
}

} // namespace seqc
