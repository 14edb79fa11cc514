#pragma once

#include "gsr/gamma_semiring.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gsr {

/// phi : M -> M' and psi : Gamma -> Gamma' as index maps.
struct Isomorphism {
    std::vector<std::size_t> phi;
    std::vector<std::size_t> psi;

    bool operator==(const Isomorphism&) const = default;
};

Isomorphism identity_isomorphism(const GammaSemiring& m);
Isomorphism inverse(const Isomorphism& iso);
/// second after first
Isomorphism compose(const Isomorphism& first, const Isomorphism& second);

/// Checks bijectivity and all three homomorphism identities.
bool is_isomorphism(const GammaSemiring& from, const GammaSemiring& to, const Isomorphism& iso);

/// Tables of m carried through iso: new index phi(a) plays the role of a.
/// Labels travel with their elements.
RawTables transport(const GammaSemiring& m, const Isomorphism& iso);

/// Exact search; invariant profiles only prune.
std::optional<Isomorphism> are_isomorphic(const GammaSemiring& lhs, const GammaSemiring& rhs);

/// Lexicographically least concatenation (add_M, add_Gamma, prod) over all
/// relabelings, together with one relabeling that attains it.
struct CanonicalForm {
    std::vector<std::uint8_t> key;
    Isomorphism relabeling;
};

inline constexpr std::size_t kCanonicalMaxOrder = 6;

/// Brute force over n! * g! relabelings; CapExceeded above kCanonicalMaxOrder.
CanonicalForm canonical_form(const GammaSemiring& m);

/// Canonical relabeling of m with labels 0..n-1 for M and g0..g{g-1} for Gamma.
GammaSemiring canonical_instance(const GammaSemiring& m, std::string name);

} // namespace gsr
