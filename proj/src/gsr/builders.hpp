#pragma once

#include "gsr/gamma_semiring.hpp"

#include <cstddef>
#include <vector>

namespace gsr {

/// M = {1..k} and Gamma = {1..g} under max, product min(a, al, b).
GammaSemiring build_minmax(std::size_t k, std::size_t g);

/// M = Z_n under +, Gamma a set of residues closed under + mod n, product
/// a*al*b mod n. Labels are the residues; Gamma keeps ascending order.
GammaSemiring build_zmod(std::size_t n, const std::vector<std::size_t>& gamma_residues);

/// M = rows x cols matrices over Z_p, Gamma = cols x rows matrices, product
/// W*al*Y. Matrices are indexed by their entries read row-major as base-p
/// digits, most significant first.
GammaSemiring build_matrix(std::size_t p, std::size_t rows, std::size_t cols,
                           std::size_t cap = kDefaultCarrierCap);

} // namespace gsr
