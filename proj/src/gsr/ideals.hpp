#pragma once

#include "gsr/gamma_semiring.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gsr {

enum class IdealKind { SubGsr, GammaIdeal, Quasi, Bi, GenBi };

inline constexpr std::array<IdealKind, 5> kAllKinds{
    IdealKind::SubGsr, IdealKind::GammaIdeal, IdealKind::Quasi, IdealKind::Bi, IdealKind::GenBi,
};

/// SUB_GSR, GAMMA_IDEAL, ...
std::string_view kind_name(IdealKind kind) noexcept;
/// sub-gsr, gamma-ideal, quasi, bi, gen-bi
std::string_view kind_flag(IdealKind kind) noexcept;
/// Accepts either spelling, case-insensitive.
std::optional<IdealKind> parse_kind(std::string_view text) noexcept;

/// Alternating factors m0 g0 m1 g1 ... mk, evaluated left to right. A single
/// factor is the element itself.
using Term = std::vector<std::size_t>;

/// Offending element plus how it arises: each derivation is a list of terms
/// whose sum (left to right) is the element. Quasi failures carry two
/// derivations, one from S Gamma M and one from M Gamma S.
struct KindWitness {
    std::string clause;
    std::size_t element = 0;
    std::vector<std::vector<Term>> derivations;
};

struct KindCheck {
    bool holds = true;
    std::optional<KindWitness> witness;
};

std::size_t evaluate_term(const GammaSemiring& m, const Term& term);
std::size_t evaluate_sum(const GammaSemiring& m, const std::vector<Term>& terms);

namespace kernel {
bool has_kind(const GammaSemiring& m, Mask s, IdealKind kind);
Mask generated_gen_bi(const GammaSemiring& m, Mask a);
} // namespace kernel

KindCheck has_kind(const GammaSemiring& m, const ElementSet& s, IdealKind kind);

/// (A) = A u A Gamma M Gamma A
ElementSet generated_gen_bi(const GammaSemiring& m, const ElementSet& a);

/// a Gamma M
ElementSet principal_left(const GammaSemiring& m, std::size_t a);
/// M Gamma a
ElementSet principal_right(const GammaSemiring& m, std::size_t a);

/// a Gamma M Gamma a
ElementSet sandwich(const GammaSemiring& m, std::size_t a);

/// (a Gamma T Gamma a) n T, or nullopt when that is empty. T must be a
/// sub-Gamma-semiring (NotSubGsr otherwise).
std::optional<ElementSet> sandwich_relative(const GammaSemiring& m, const ElementSet& t, std::size_t a);

/// (B Gamma A, A Gamma B) for a generalized bi-Gamma-ideal B.
std::pair<ElementSet, ElementSet> translate(const GammaSemiring& m, const ElementSet& b, const ElementSet& a);

} // namespace gsr
