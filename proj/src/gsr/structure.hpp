#pragma once

#include "gsr/gamma_semiring.hpp"
#include "gsr/ideals.hpp"

#include <optional>
#include <vector>

namespace gsr {

inline constexpr std::size_t kDefaultEnumerationCap = 14;

/// Every nonempty subset of M with the given kind, in increasing mask order.
std::vector<ElementSet> enumerate_ideals(const GammaSemiring& m, IdealKind kind,
                                         std::size_t cap = kDefaultEnumerationCap);

namespace kernel {
std::vector<Mask> enumerate_ideals(const GammaSemiring& m, IdealKind kind, std::size_t cap = kDefaultEnumerationCap);
}

/// The three equivalent GB-simplicity conditions, each evaluated on its own.
struct GbSimpleRecord {
    bool verdict = false;
    /// M is its only generalized bi-ideal; unset when n exceeds the cap.
    std::optional<bool> only_whole_carrier;
    /// a Gamma M Gamma a = M for every a.
    bool sandwich_is_whole = false;
    /// (a) = M for every a.
    bool generated_is_whole = false;
    /// First a (index order) with a Gamma M Gamma a != M, and that sandwich.
    std::optional<std::size_t> witness_element;
    Mask witness_sandwich = 0;
    /// First proper generalized bi-ideal met by the enumeration, if any.
    std::optional<Mask> proper_ideal;
};

/// Throws EquivalenceBroken if the evaluated conditions disagree.
GbSimpleRecord is_gb_simple(const GammaSemiring& m, std::size_t cap = kDefaultEnumerationCap);

struct MinimalityCheck {
    bool minimal = true;
    /// First strictly smaller subset of the same kind, in mask order.
    std::optional<ElementSet> smaller;
};

/// Scans the nonempty proper subsets of S. KindNotSatisfied unless S has the
/// kind; CapExceeded when |S| exceeds the cap.
MinimalityCheck is_minimal(const GammaSemiring& m, const ElementSet& s, IdealKind kind,
                           std::size_t cap = kDefaultEnumerationCap);

} // namespace gsr
