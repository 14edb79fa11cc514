#pragma once

#include "gsr/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gsr {

/// {"T": "{0,1}", "a": "1", ...} keyed by slot name.
nlohmann::ordered_json witness_bindings(const GammaSemiring& m, const Witness& w);

nlohmann::ordered_json witness_json(const GammaSemiring& m, const Witness& w);

nlohmann::ordered_json report_json(const GammaSemiring& m, const VerificationReport& r);

/// {"instance": name, "statements": [report...]}
nlohmann::ordered_json verification_json(const GammaSemiring& m, const std::vector<VerificationReport>& reports);

/// "T=M-style bindings" rendered as "T={0,1} A={0,2}".
std::string format_bindings(const GammaSemiring& m, const Witness& w);

/// One line: id, verdict, counterexample count, first witness.
std::string report_line(const GammaSemiring& m, const VerificationReport& r);

} // namespace gsr
