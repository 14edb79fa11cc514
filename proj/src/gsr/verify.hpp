#pragma once

#include "gsr/gamma_semiring.hpp"
#include "gsr/structure.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gsr {

/// Bounds for the subset quantifiers of the statement checks.
///
/// When n <= full_enumeration_max_n every subset quantifier ranges over all
/// nonempty subsets of M. Otherwise the subset universe is the first
/// max_evaluations nonempty masks in increasing order, which is closed under
/// taking subsets. Independently, each statement stops after max_evaluations
/// bound-variable assignments. Either cut turns an otherwise clean run into
/// BUDGET_EXHAUSTED.
struct Budget {
    std::size_t full_enumeration_max_n = 12;
    std::uint64_t max_evaluations = 1'000'000;
    /// Witnesses kept per report (the count is always exact); 0 keeps all.
    std::size_t max_witnesses = 64;
    /// Cap handed to is_gb_simple / is_minimal on sub-instances.
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    /// 0 means one per hardware thread. Output does not depend on it.
    std::size_t workers = 1;
};

enum class Verdict { Pass, Fail, BudgetExhausted };

std::string_view verdict_name(Verdict v) noexcept;

enum class SlotType { Element, Set };

struct Slot {
    std::string_view name;
    SlotType type;
};

/// One bound-variable assignment under which a statement body is false.
/// values[i] is an element index or a mask, following statement_slots(id).
struct Witness {
    std::string statement;
    std::array<Mask, 2> values{};
    std::string detail;

    bool operator==(const Witness&) const = default;
};

struct VerificationReport {
    std::string statement_id;
    std::string instance;
    std::uint64_t evaluations = 0;
    std::uint64_t universe_size = 0;
    bool truncated = false;
    Verdict verdict = Verdict::Pass;
    std::uint64_t counterexamples = 0;
    std::vector<Witness> witnesses;
};

/// Registered ids in registry order.
const std::vector<std::string_view>& statement_ids();
bool is_statement(std::string_view id);
const std::vector<Slot>& statement_slots(std::string_view id);
std::string_view statement_summary(std::string_view id);

/// UnknownStatement for unregistered ids.
VerificationReport verify(const GammaSemiring& m, std::string_view statement_id, const Budget& budget = {});

/// Runs several statements sharing one precomputed subset universe.
std::vector<VerificationReport> verify_many(const GammaSemiring& m, const std::vector<std::string_view>& ids,
                                            const Budget& budget = {});

/// Re-evaluates the statement body at the witness. True when the violation
/// reproduces.
bool replay(const GammaSemiring& m, const Witness& witness, const Budget& budget = {});

} // namespace gsr
