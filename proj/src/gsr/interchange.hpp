#pragma once

#include "gsr/gamma_semiring.hpp"

#include <string>
#include <string_view>

namespace gsr {

/// Reads the instance interchange object:
///   {"name", "M", "Gamma", "add_M", "add_Gamma", "prod"[a][alpha][b]}
/// Structural problems (bad JSON, wrong types, ragged arrays, out-of-range
/// indices) raise MalformedTable. Axioms are not checked here.
RawTables parse_raw_json(std::string_view text);

std::string to_json(const RawTables& raw);
std::string to_json(const GammaSemiring& m);

/// parse_raw_json + seal. IoError when the file cannot be read.
GammaSemiring load_instance(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace gsr
