#pragma once

#include "gsr/gamma_semiring.hpp"
#include "gsr/ideals.hpp"
#include "gsr/verify.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gsr {

/// Square table of a commutative semigroup, row-major.
struct SemigroupTable {
    std::size_t order = 0;
    std::vector<std::uint8_t> entries;

    std::size_t operator()(std::size_t a, std::size_t b) const { return entries[a * order + b]; }
    bool operator==(const SemigroupTable&) const = default;
    auto operator<=>(const SemigroupTable&) const = default;
};

inline constexpr std::size_t kSemigroupCap = 4;
inline constexpr std::size_t kCensusMaxN = 3;
inline constexpr std::size_t kCensusMaxG = 2;

/// One canonical table per isomorphism class, in key order.
std::vector<SemigroupTable> enum_comm_semigroups(std::size_t n, std::size_t cap = kSemigroupCap);

/// Canonical (lexicographically least) relabeling of a semigroup table.
SemigroupTable canonical_semigroup(const SemigroupTable& t);

/// All Gamma-semirings with |M| = n, |Gamma| = g up to isomorphism, each in
/// canonical form, ordered by canonical key. Identical for any worker count.
std::vector<GammaSemiring> enum_gamma_semirings(std::size_t n, std::size_t g, std::size_t workers = 1,
                                                std::size_t max_n = kCensusMaxN, std::size_t max_g = kCensusMaxG);

struct CensusRecord {
    GammaSemiring instance;
    std::size_t n = 0;
    std::size_t g = 0;
    std::array<std::size_t, kAllKinds.size()> kind_counts{};
    bool gb_simple = false;
    std::vector<VerificationReport> reports;
};

struct Census {
    std::size_t max_n = 0;
    std::size_t max_g = 0;
    std::vector<CensusRecord> records;
};

/// Every class for 1 <= n <= max_n, 1 <= g <= max_g with kind counts,
/// GB-simplicity and the full statement registry.
Census census_report(std::size_t max_n, std::size_t max_g, std::size_t workers = 1,
                     std::size_t cap_n = kCensusMaxN, std::size_t cap_g = kCensusMaxG);

/// File name of a record's instance inside the output directory.
std::string census_file_name(const CensusRecord& rec);

/// Aggregate summary as pretty JSON text.
std::string census_summary_json(const Census& census);

/// One interchange file per class plus summary.json.
void write_census(const Census& census, const std::string& directory);

} // namespace gsr
