#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "seqc/autoseq.hpp"
#include "seqc/contfrac.hpp"
#include "seqc/expcomp.hpp"
#include "seqc/kernels.hpp"
#include "seqc/laurent.hpp"
#include "seqc/lincomp.hpp"
#include "seqc/report_json.hpp"
#include "seqc/theory.hpp"

namespace seqc::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string seq;
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    std::uint64_t a = 1;
    std::uint32_t v0 = 1;
    std::size_t n = 0;
    std::string method = "both";
    std::string out;
    std::string format;
    std::uint32_t dmax = default_expansion_cap;
    std::uint64_t seed = 1;
    std::string input;
    std::string suite;
    std::uint32_t kmax = 4;
    std::size_t inject_fault = 0;
    std::string kind = "all";
    std::vector<std::size_t> sizes;
};

// A prefix plus whatever is known about where it came from.
struct Source {
    PrimeField field{2};
    std::vector<FieldElem> symbols;
    std::optional<SequenceSpec> spec;
    std::string name;
};

SequenceSpec spec_from_flags(const RunConfig& cfg) {
    const std::string& s = cfg.seq;
    try {
        if (s == "thue-morse") return thue_morse();
        if (s == "rudin-shapiro") return rudin_shapiro();
        if (s == "pattern") return pattern(cfg.p, cfg.k, cfg.a);
        if (s == "sum-of-digits") return sum_of_digits(cfg.p);
        if (s == "baum-sweet") return baum_sweet();
        if (s == "paper-folding") return paper_folding(cfg.v0);
        if (s == "perfect-profile") return perfect_profile();
        if (auto parsed = parse_canonical_name(s)) {
            validate(*parsed);
            return *parsed;
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown sequence '" + s + "'");
}

Source read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    Source src;
    std::string line, body;
    std::uint64_t p = 2;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') {
            std::istringstream header(line.substr(1));
            std::string field;
            while (header >> field) {
                if (field.rfind("p=", 0) == 0) p = std::stoull(field.substr(2));
                if (field.rfind("spec=", 0) == 0) src.name = field.substr(5);
            }
            continue;
        }
        body += line;
    }
    try {
        src.field = PrimeField(p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    for (char c : body) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        FieldElem v;
        if (c >= '0' && c <= '9') {
            v = static_cast<FieldElem>(c - '0');
        } else if (c >= 'a' && c <= 'z') {
            v = static_cast<FieldElem>(c - 'a' + 10);
        } else {
            throw UsageError(std::string("bad symbol '") + c + "' in " + path);
        }
        if (!src.field.contains(v)) throw UsageError(std::string("symbol '") + c + "' outside F_" + std::to_string(p));
        src.symbols.push_back(v);
    }
    if (src.symbols.empty()) throw UsageError(path + " holds no symbols");
    if (auto s = parse_canonical_name(src.name)) {
        if (field_of(*s) == src.field) src.spec = *s;
    }
    if (src.name.empty()) src.name = "input";
    return src;
}

Source resolve_source(const RunConfig& cfg, bool need_n) {
    if (!cfg.input.empty()) {
        Source src = read_sequence_file(cfg.input);
        if (cfg.n != 0) {
            if (cfg.n > src.symbols.size()) throw UsageError("--n exceeds the symbols in " + cfg.input);
            src.symbols.resize(cfg.n);
        }
        return src;
    }
    if (cfg.seq.empty()) throw UsageError("one of --seq or --input is required");
    if (need_n && cfg.n == 0) throw UsageError("--n must be at least 1");
    Source src;
    if (cfg.seq == "random") {
        try {
            src.field = PrimeField(cfg.p);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<FieldElem> dist(0, src.field.p() - 1);
        src.symbols.resize(cfg.n);
        for (auto& v : src.symbols) v = dist(rng);
        src.name = "random";
        return src;
    }
    SequenceSpec spec = spec_from_flags(cfg);
    src.field = field_of(spec);
    src.symbols = prefix(spec, cfg.n);
    src.spec = spec;
    src.name = canonical_name(spec);
    return src;
}

// Writes to --out when given, else to the default stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw UsageError("cannot write " + path);
        stream_ = &file_;
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::string digits_of(std::span<const FieldElem> symbols) {
    static constexpr char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::string s;
    s.reserve(symbols.size());
    for (FieldElem v : symbols) s.push_back(digits[v]);
    return s;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.input.empty()) throw UsageError("generate takes --seq, not --input");
    const Source src = resolve_source(cfg, true);
    if (src.field.p() > 36) throw UsageError("the text format holds symbols of fields up to F_36");
    Sink sink(cfg.out, out);
    *sink << "# p=" << src.field.p() << " spec=" << src.name << '\n' << digits_of(src.symbols) << '\n';
    return exit_ok;
}

std::optional<std::int64_t> formula_for(const std::optional<SequenceSpec>& spec, std::int64_t n) {
    if (!spec) return std::nullopt;
    if (*spec == thue_morse()) return thue_morse_exact(n);
    if (auto k = all_ones_length(*spec)) return allones_exact(*k, n);
    if (std::holds_alternative<PerfectProfileSeq>(*spec)) return perfect_profile_exact(n);
    return std::nullopt;
}

int cmd_profile(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.method != "bm" && cfg.method != "cf" && cfg.method != "both") throw UsageError("--method must be bm, cf or both");
    const std::string format = cfg.format.empty() ? "csv" : cfg.format;
    if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
    const Source src = resolve_source(cfg, true);
    const std::size_t n_max = src.symbols.size();
    const bool use_bm = cfg.method != "cf";
    const bool use_cf = cfg.method != "bm";

    std::optional<Profile> bm, cf;
    if (use_bm) bm = bm_profile(src.symbols, src.field);
    if (use_cf) cf = profile_from_cf(series_from_prefix(src.symbols, src.field), n_max);
    if (bm && cf) {
        for (std::size_t n = 1; n <= n_max; ++n) {
            if (bm->at(n) != cf->at(n)) {
                err << "error: methods diverge first at N = " << n << " (bm " << bm->at(n) << ", cf " << cf->at(n)
                    << ")\n";
                return exit_failure;
            }
        }
    }
    std::optional<AlgebraicWitness> w;
    if (src.spec) w = witness(*src.spec);

    Sink sink(cfg.out, out);
    nlohmann::json rows = nlohmann::json::array();
    if (format == "csv") *sink << "N,L_bm,L_cf,L_formula,lower_num,lower_den,upper_num,upper_den\n";
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto nn = static_cast<std::int64_t>(n);
        const auto formula = formula_for(src.spec, nn);
        std::optional<BoundPair> b;
        if (w) b = general_bounds(w->d, w->m, nn);
        if (format == "csv") {
            *sink << n << ',' << (bm ? std::to_string(bm->at(n)) : "") << ',' << (cf ? std::to_string(cf->at(n)) : "")
                  << ',' << (formula ? std::to_string(*formula) : "") << ',';
            if (b) {
                *sink << b->lower.num << ',' << b->lower.den << ',' << b->upper.num << ',' << b->upper.den << '\n';
            } else {
                *sink << ",,,\n";
            }
        } else {
            nlohmann::json row{{"N", n}};
            row["L_bm"] = bm ? nlohmann::json(bm->at(n)) : nlohmann::json(nullptr);
            row["L_cf"] = cf ? nlohmann::json(cf->at(n)) : nlohmann::json(nullptr);
            row["L_formula"] = formula ? nlohmann::json(*formula) : nlohmann::json(nullptr);
            row["lower"] = b ? nlohmann::json{b->lower.num, b->lower.den} : nlohmann::json(nullptr);
            row["upper"] = b ? nlohmann::json{b->upper.num, b->upper.den} : nlohmann::json(nullptr);
            rows.push_back(std::move(row));
        }
    }
    if (format == "json") {
        nlohmann::json doc{{"spec", src.name}, {"p", src.field.p()}, {"rows", std::move(rows)}};
        *sink << doc.dump(2) << '\n';
    }
    return exit_ok;
}

int cmd_expansion(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.dmax == 0) throw UsageError("--dmax must be at least 1");
    const Source src = resolve_source(cfg, true);
    const auto results = expansion_profile(src.symbols, src.field, cfg.dmax);
    Sink sink(cfg.out, out);
    for (const auto& r : results) *sink << to_json(r).dump() << '\n';
    const auto& last = results.back();
    if (last.e) {
        err << src.name << ": E_" << last.n << " = " << *last.e << '\n';
    } else {
        err << src.name << ": E_" << last.n << " exceeds the cap " << cfg.dmax << '\n';
    }
    return exit_ok;
}

std::vector<FieldElem> corrupt(std::vector<FieldElem> symbols, std::size_t n, const PrimeField& f) {
    if (n == 0) return symbols;
    if (n > symbols.size()) throw UsageError("--inject-fault is beyond --nmax");
    symbols[n - 1] = f.add(symbols[n - 1], 1);
    return symbols;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<SequenceSpec> specs;
    if (!cfg.suite.empty()) {
        if (cfg.suite != "all") throw UsageError("--suite supports only 'all'");
        specs = verification_suite(cfg.kmax);
    } else {
        if (cfg.seq.empty()) throw UsageError("one of --seq or --suite is required");
        specs.push_back(spec_from_flags(cfg));
    }
    if (cfg.n < 4) throw UsageError("--nmax must be at least 4");

    std::vector<VerifyReport> reports;
    for (const auto& spec : specs) {
        const auto symbols = corrupt(prefix(spec, cfg.n), cfg.inject_fault, field_of(spec));
        reports.push_back(verify_prefix(spec, symbols));
    }
    bool ok = true;
    nlohmann::json docs = nlohmann::json::array();
    for (const auto& r : reports) {
        docs.push_back(to_json(r));
        if (r.passed()) {
            err << "PASS " << r.spec << " (N <= " << r.n_max << ")\n";
            continue;
        }
        ok = false;
        err << "FAIL " << r.spec;
        if (auto n = r.first_failure()) err << ": first failing N = " << *n;
        err << '\n';
        for (const auto& c : r.checks) {
            if (c.pass) continue;
            err << "  " << c.name << " at N = " << (c.first_fail_n ? std::to_string(*c.first_fail_n) : "?")
                << ": expected " << c.expected << ", got " << c.actual << '\n';
        }
    }
    Sink sink(cfg.out, out);
    const nlohmann::json doc = docs.size() == 1 ? docs.front() : nlohmann::json{{"pass", ok}, {"reports", docs}};
    *sink << doc.dump(2) << '\n';
    return ok ? exit_ok : exit_failure;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
    if (cfg.kind != "bm" && cfg.kind != "cf" && cfg.kind != "all") throw UsageError("--kind must be bm, cf or all");
    std::vector<std::size_t> sizes = cfg.sizes;
    if (sizes.empty()) sizes = {std::size_t{1} << 12, std::size_t{1} << 14, std::size_t{1} << 16};
    if (std::find(sizes.begin(), sizes.end(), std::size_t{0}) != sizes.end()) throw UsageError("bench sizes must be >= 1");

    const PrimeField f2(2);
    using clock = std::chrono::steady_clock;
    Sink sink(cfg.out, out);
    *sink << "isa,kind,N,seconds,budget_s,within_budget\n";
    bool ok = true;
    for (kernels::Isa isa : kernels::available_isas()) {
        kernels::ScopedIsa scope(isa);
        for (std::size_t n : sizes) {
            std::mt19937_64 rng(cfg.seed);
            std::vector<FieldElem> bits(n);
            for (auto& b : bits) b = static_cast<FieldElem>(rng() & 1u);
            auto row = [&](const char* kind, double secs, std::optional<double> budget) {
                const bool within = !budget || secs < *budget;
                ok = ok && within;
                *sink << kernels::isa_name(isa) << ',' << kind << ',' << n << ',' << std::fixed << std::setprecision(4)
                      << secs << ',' << (budget ? std::to_string(static_cast<int>(*budget)) : "") << ','
                      << (within ? "yes" : "no") << '\n';
            };
            if (cfg.kind != "cf") {
                const auto t0 = clock::now();
                const Profile prof = bm_profile(bits, f2);
                const std::chrono::duration<double> dt = clock::now() - t0;
                row("bm", dt.count(), n <= (std::size_t{1} << 14) ? std::optional<double>(10.0) : std::nullopt);
            }
            if (cfg.kind != "bm") {
                const auto t0 = clock::now();
                const LaurentSeries r = series_from_prefix(bits, f2);
                if (!r.is_zero()) (void)cf_expand(r);
                const std::chrono::duration<double> dt = clock::now() - t0;
                row("cf", dt.count(), n <= (std::size_t{1} << 16) ? std::optional<double>(30.0) : std::nullopt);
            }
        }
    }
    return ok ? exit_ok : exit_failure;
}

void add_sequence_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--seq", cfg.seq, "thue-morse, rudin-shapiro, pattern, sum-of-digits, baum-sweet, paper-folding, "
                                      "perfect-profile, random, or a full name such as pattern-3-2-4");
    sub->add_option("--p", cfg.p, "field characteristic for pattern, sum-of-digits and random");
    sub->add_option("--k", cfg.k, "pattern length");
    sub->add_option("--a", cfg.a, "pattern value, 0 < a < p^k");
    sub->add_option("--v0", cfg.v0, "paper-folding initial term");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Linear complexity, continued fractions and expansion complexity of automatic sequences", "seqc"};
    app.set_config("--config", "", "key=value file mirroring the flags");
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "write a sequence prefix in the text format");
    add_sequence_flags(gen, cfg);
    gen->add_option("--n", cfg.n, "number of terms")->required();
    gen->add_option("--out", cfg.out, "output path");
    gen->add_option("--seed", cfg.seed, "seed for --seq random");

    auto* prof = app.add_subcommand("profile", "linear complexity profile as CSV or JSON");
    add_sequence_flags(prof, cfg);
    prof->add_option("--input", cfg.input, "sequence file instead of --seq");
    prof->add_option("--n", cfg.n, "number of terms");
    prof->add_option("--method", cfg.method, "bm, cf or both");
    prof->add_option("--format", cfg.format, "csv or json");
    prof->add_option("--out", cfg.out, "output path");
    prof->add_option("--seed", cfg.seed, "seed for --seq random");

    auto* exp = app.add_subcommand("expansion", "expansion complexity E_N for N = 1..n, one JSON object per line");
    add_sequence_flags(exp, cfg);
    exp->add_option("--input", cfg.input, "sequence file instead of --seq");
    exp->add_option("--n", cfg.n, "number of terms");
    exp->add_option("--dmax", cfg.dmax, "largest total degree searched");
    exp->add_option("--out", cfg.out, "output path");
    exp->add_option("--seed", cfg.seed, "seed for --seq random");

    auto* ver = app.add_subcommand("verify", "check computed profiles against the closed forms and bounds");
    add_sequence_flags(ver, cfg);
    ver->add_option("--nmax,--n", cfg.n, "number of terms")->required();
    ver->add_option("--suite", cfg.suite, "'all' for every built-in sequence");
    ver->add_option("--kmax", cfg.kmax, "largest all-one pattern length in the suite");
    ver->add_option("--inject-fault", cfg.inject_fault, "corrupt term N-1 before checking (negative control)");
    ver->add_option("--out", cfg.out, "report path");

    auto* bench = app.add_subcommand("bench", "time Berlekamp-Massey and continued fractions over F_2");
    bench->add_option("--kind", cfg.kind, "bm, cf or all");
    bench->add_option("--n", cfg.sizes, "prefix lengths (default 4096 16384 65536)");
    bench->add_option("--seed", cfg.seed, "seed for the random prefix");
    bench->add_option("--out", cfg.out, "output path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (gen->parsed()) return cmd_generate(cfg, out);
        if (prof->parsed()) return cmd_profile(cfg, out, err);
        if (exp->parsed()) return cmd_expansion(cfg, out, err);
        if (ver->parsed()) return cmd_verify(cfg, out, err);
        if (bench->parsed()) return cmd_bench(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace seqc::cli
