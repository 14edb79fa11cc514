#pragma once

#include "gsr/gamma_semiring.hpp"

#include <span>

namespace gsr {

// Mask-level kernels. No operand checks; callers pass masks inside the
// carrier. Every "product" here ranges over the full Gamma unless a Lambda
// mask is given.
namespace kernel {

/// {a+b : a in A, b in B}
Mask sum(const GammaSemiring& m, Mask a, Mask b);

/// Least superset closed under +.
Mask closure(const GammaSemiring& m, Mask s);

bool sum_closed(const GammaSemiring& m, Mask s);

/// {a l b : a in A, l in Lambda, b in B}, without closing under +.
Mask elementary(const GammaSemiring& m, Mask a, Mask lambda, Mask b);
Mask elementary(const GammaSemiring& m, Mask a, Mask b);

/// A Lambda B: the elementary products closed under +.
Mask product(const GammaSemiring& m, Mask a, Mask lambda, Mask b);
Mask product(const GammaSemiring& m, Mask a, Mask b);

/// Elementary words a1 g1 a2 g2 ... ak, not closed under +.
Mask chain_words(const GammaSemiring& m, std::span<const Mask> sets);

/// Elementary words a g x h c with x ranging over mid.
Mask sandwich_words(const GammaSemiring& m, Mask a, Mask mid, Mask c);

/// A Gamma X Gamma C (closed under +).
Mask sandwich(const GammaSemiring& m, Mask a, Mask mid, Mask c);

} // namespace kernel

/// {a+b : a in A, b in B}; pointwise only, no closure.
ElementSet add_pointwise(const GammaSemiring& m, const ElementSet& a, const ElementSet& b);

/// All sums of length >= 1 drawn from S.
ElementSet additive_closure(const GammaSemiring& m, const ElementSet& s);

/// A Lambda B, i.e. every finite nonempty sum of a l b.
ElementSet gamma_product(const GammaSemiring& m, const ElementSet& a, const ElementSet& lambda, const ElementSet& b);
ElementSet gamma_product(const GammaSemiring& m, const ElementSet& a, const ElementSet& b);

/// A1 Gamma A2 Gamma ... Gamma Ak for k >= 2.
ElementSet chain_product(const GammaSemiring& m, std::span<const ElementSet> sets);

} // namespace gsr
