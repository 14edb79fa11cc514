#pragma once

#include "gsr/gamma_semiring.hpp"
#include "gsr/ideals.hpp"

#include <string>
#include <string_view>

namespace gsr {

/// "{1,2,3}" in index order; "{}" for the empty set.
std::string format_set(const GammaSemiring& m, Mask s, Carrier carrier = Carrier::M);

/// Comma-separated labels, optionally wrapped in braces. Unknown labels raise
/// MalformedTable naming the label.
Mask parse_set(const GammaSemiring& m, std::string_view text, Carrier carrier = Carrier::M);

/// "a*al*b*be*c" with labels.
std::string format_term(const GammaSemiring& m, const Term& term);

/// e.g. "sum: 1+2 = 3 not in set" or "gen-bi: 2*1*1*1*2 = 1 not in set".
std::string describe(const GammaSemiring& m, const KindWitness& w);

} // namespace gsr
