#include "seqc/report_json.hpp"

namespace seqc {
namespace {

nlohmann::json optional_n(const std::optional<std::int64_t>& n) {
    return n ? nlohmann::json(*n) : nlohmann::json(nullptr);
}

} // namespace

nlohmann::json to_json(const VerifyReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"first_fail_N", optional_n(c.first_fail_n)},
                          {"expected", c.expected},
                          {"actual", c.actual}});
    }
    return {{"spec", report.spec},
            {"n_max", report.n_max},
            {"pass", report.passed()},
            {"first_fail_N", optional_n(report.first_failure())},
            {"checks", std::move(checks)}};
}

nlohmann::json to_json(const ExpansionResult& result) {
    nlohmann::json witness = nlohmann::json::array();
    for (const auto& m : result.witness) witness.push_back({m.i, m.j, m.c});
    return {{"N", result.n},
            {"status", status_name(result.status)},
            {"E", result.e ? nlohmann::json(*result.e) : nlohmann::json(nullptr)},
            {"witness", std::move(witness)}};
}

nlohmann::json to_json(const CFExpansion& cf) {
    nlohmann::json quotients = nlohmann::json::array();
    for (const auto& a : cf.quotients) quotients.push_back(a.to_digits());
    return {{"p", cf.field.p()},
            {"precision", cf.precision},
            {"reliable_count", cf.reliable_count},
            {"terminated", cf.terminated},
            {"quotients", std::move(quotients)},
            {"q_degrees", cf.q_degrees}};
}

} // namespace seqc
