#pragma once

#include <json.hpp>

#include "seqc/contfrac.hpp"
#include "seqc/expcomp.hpp"
#include "seqc/theory.hpp"

namespace seqc {

/// {spec, n_max, pass, first_fail_N, checks: [{name, pass, first_fail_N, expected, actual}]}
nlohmann::json to_json(const VerifyReport& report);

/// {N, status, E, witness: [[i, j, c], ...]}
nlohmann::json to_json(const ExpansionResult& result);

/// {p, precision, reliable_count, terminated, quotients: ["<low-to-high digits>", ...], q_degrees}
nlohmann::json to_json(const CFExpansion& cf);

} // namespace seqc
