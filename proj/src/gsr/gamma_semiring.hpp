#pragma once

#include "gsr/error.hpp"
#include "gsr/mask.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gsr {

inline constexpr std::size_t kDefaultCarrierCap = 64;

/// Unchecked operation tables as they arrive from a file or a builder.
/// Entries are wide signed integers so that out-of-range input survives
/// until validation can report it.
struct RawTables {
    std::string name;
    std::vector<std::string> m_labels;
    std::vector<std::string> g_labels;
    std::vector<std::vector<std::int64_t>> add_m;
    std::vector<std::vector<std::int64_t>> add_g;
    std::vector<std::vector<std::vector<std::int64_t>>> prod; // [a][alpha][b]

    bool operator==(const RawTables&) const = default;
};

enum class Axiom { CommM, AssocM, CommG, AssocG, LDist, RDist, GDist, PAssoc };

inline constexpr std::array<Axiom, 8> kAllAxioms{
    Axiom::CommM, Axiom::AssocM, Axiom::CommG, Axiom::AssocG,
    Axiom::LDist, Axiom::RDist,  Axiom::GDist, Axiom::PAssoc,
};

std::string_view axiom_name(Axiom axiom) noexcept;
std::optional<Axiom> axiom_from_name(std::string_view name) noexcept;

/// One failed identity with the lexicographically first tuple that breaks it.
/// Witness layout per axiom (indices into M or Gamma as marked):
///   COMM_M (a,b)  ASSOC_M (a,b,c)  COMM_G (al,be)  ASSOC_G (al,be,ga)
///   LDIST (a,al,b,c)  RDIST (a,b,al,c)  GDIST (a,al,be,b)  PASSOC (a,al,b,be,c)
struct AxiomViolation {
    Axiom axiom;
    std::vector<std::size_t> witness;

    bool operator==(const AxiomViolation&) const = default;
};

/// True when evaluating the identity at the witness against raw tables
/// gives two different sides.
bool replay(const RawTables& raw, const AxiomViolation& violation);

/// "LDIST(a,al,b,c)" with the witness written as labels.
std::string format_violation(const RawTables& raw, const AxiomViolation& violation);

/// Which positions of a witness tuple index Gamma rather than M.
std::vector<bool> witness_gamma_positions(Axiom axiom);

class GammaSemiring;
struct ValidationResult;

ValidationResult validate(const RawTables& raw, std::size_t cap);

/// A validated finite Gamma-semiring. Immutable; copies share the same id, so
/// element sets built against one copy are accepted by the others.
class GammaSemiring {
public:
    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return n_; }
    std::size_t gamma_size() const noexcept { return g_; }
    std::uint64_t id() const noexcept { return id_; }

    const std::vector<std::string>& m_labels() const noexcept { return m_labels_; }
    const std::vector<std::string>& g_labels() const noexcept { return g_labels_; }

    std::size_t add(std::size_t a, std::size_t b) const noexcept { return add_m_[a * n_ + b]; }
    std::size_t gadd(std::size_t al, std::size_t be) const noexcept { return add_g_[al * g_ + be]; }
    std::size_t mul(std::size_t a, std::size_t al, std::size_t b) const noexcept
    {
        return prod_[(a * g_ + al) * n_ + b];
    }

    Mask carrier() const noexcept { return full_mask(n_); }
    Mask gamma_carrier() const noexcept { return full_mask(g_); }

    /// {a al b : al in Gamma}
    Mask pair_products(std::size_t a, std::size_t b) const noexcept { return pair_products_[a * n_ + b]; }
    /// {a al m be c : al, be in Gamma, m in M}
    Mask sandwich_words(std::size_t a, std::size_t c) const noexcept { return sandwich_words_[a * n_ + c]; }

    RawTables to_raw() const;

    /// Same tables under a new name; keeps the id.
    GammaSemiring renamed(std::string name) const;

    bool same_tables(const GammaSemiring& other) const noexcept
    {
        return n_ == other.n_ && g_ == other.g_ && add_m_ == other.add_m_ &&
               add_g_ == other.add_g_ && prod_ == other.prod_;
    }

    /// Index of the label, if present.
    std::optional<std::size_t> find_label(std::string_view label) const;
    std::optional<std::size_t> find_gamma_label(std::string_view label) const;

private:
    friend ValidationResult validate(const RawTables&, std::size_t);

    GammaSemiring() = default;
    void precompute();

    std::string name_;
    std::vector<std::string> m_labels_;
    std::vector<std::string> g_labels_;
    std::size_t n_ = 0;
    std::size_t g_ = 0;
    std::vector<std::uint8_t> add_m_;
    std::vector<std::uint8_t> add_g_;
    std::vector<std::uint8_t> prod_;
    std::uint64_t id_ = 0;

    std::vector<Mask> pair_products_;
    std::vector<Mask> sandwich_words_;
};

struct ValidationResult {
    std::optional<GammaSemiring> instance;
    std::vector<AxiomViolation> violations;

    bool ok() const noexcept { return instance.has_value(); }
};

/// Table dimensions, index ranges and labels only. Throws MalformedTable or
/// CapExceeded.
void check_shape(const RawTables& raw, std::size_t cap = kMaxCarrier);

/// Checks shape and ranges (throwing MalformedTable / CapExceeded) and then
/// all eight axiom families over every tuple.
ValidationResult validate(const RawTables& raw, std::size_t cap = kDefaultCarrierCap);

/// Like validate but throws AxiomViolation listing the violated ids.
GammaSemiring seal(const RawTables& raw, std::size_t cap = kDefaultCarrierCap);

enum class Carrier { M, Gamma };

/// A subset of one instance's M (or, for Lambda arguments, of its Gamma).
class ElementSet {
public:
    ElementSet(const GammaSemiring& owner, Mask members, Carrier carrier = Carrier::M);

    static ElementSet from_indices(const GammaSemiring& owner, const std::vector<std::size_t>& indices,
                                   Carrier carrier = Carrier::M);
    static ElementSet full(const GammaSemiring& owner) { return {owner, owner.carrier()}; }
    static ElementSet gamma(const GammaSemiring& owner) { return {owner, owner.gamma_carrier(), Carrier::Gamma}; }

    std::uint64_t owner_id() const noexcept { return owner_; }
    Mask mask() const noexcept { return members_; }
    Carrier carrier() const noexcept { return carrier_; }
    bool empty() const noexcept { return members_ == 0; }
    std::size_t size() const noexcept { return popcount(members_); }
    bool contains(std::size_t i) const noexcept { return gsr::contains(members_, i); }
    bool subset_of(const ElementSet& other) const noexcept { return is_subset(members_, other.members_); }
    std::vector<std::size_t> indices() const;

    bool operator==(const ElementSet&) const = default;

private:
    std::uint64_t owner_;
    Mask members_;
    Carrier carrier_;
};

/// Throws OwnerMismatch unless the set belongs to the instance.
void require_owner(const GammaSemiring& m, const ElementSet& s);

/// The Gamma-semiring on carrier S with Gamma unchanged. S must be closed
/// under + and under every product (NotClosed otherwise, naming the witness).
GammaSemiring restrict(const GammaSemiring& m, const ElementSet& s);

} // namespace gsr
