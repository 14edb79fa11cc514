#include "gsr/gamma_semiring.hpp"

#include <atomic>
#include <sstream>

namespace gsr {

std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::MalformedTable: return "MALFORMED_TABLE";
    case ErrorCode::BadBounds: return "BAD_BOUNDS";
    case ErrorCode::GammaNotClosed: return "GAMMA_NOT_CLOSED";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::NotClosed: return "NOT_CLOSED";
    case ErrorCode::EmptyOperand: return "EMPTY_OPERAND";
    case ErrorCode::OwnerMismatch: return "OWNER_MISMATCH";
    case ErrorCode::LengthTooShort: return "LENGTH_TOO_SHORT";
    case ErrorCode::NotSubGsr: return "NOT_SUB_GSR";
    case ErrorCode::NotGenBi: return "NOT_GEN_BI";
    case ErrorCode::KindNotSatisfied: return "KIND_NOT_SATISFIED";
    case ErrorCode::UnknownStatement: return "UNKNOWN_STATEMENT";
    case ErrorCode::EquivalenceBroken: return "EQUIVALENCE_BROKEN";
    case ErrorCode::IoError: return "IO_ERROR";
    case ErrorCode::AxiomViolation: return "AXIOM_VIOLATION";
    }
    return "UNKNOWN";
}

std::string_view axiom_name(Axiom axiom) noexcept
{
    switch (axiom) {
    case Axiom::CommM: return "COMM_M";
    case Axiom::AssocM: return "ASSOC_M";
    case Axiom::CommG: return "COMM_G";
    case Axiom::AssocG: return "ASSOC_G";
    case Axiom::LDist: return "LDIST";
    case Axiom::RDist: return "RDIST";
    case Axiom::GDist: return "GDIST";
    case Axiom::PAssoc: return "PASSOC";
    }
    return "UNKNOWN";
}

std::optional<Axiom> axiom_from_name(std::string_view name) noexcept
{
    for (Axiom a : kAllAxioms)
        if (axiom_name(a) == name)
            return a;
    return std::nullopt;
}

std::vector<bool> witness_gamma_positions(Axiom axiom)
{
    switch (axiom) {
    case Axiom::CommM: return {false, false};
    case Axiom::AssocM: return {false, false, false};
    case Axiom::CommG: return {true, true};
    case Axiom::AssocG: return {true, true, true};
    case Axiom::LDist: return {false, true, false, false};
    case Axiom::RDist: return {false, false, true, false};
    case Axiom::GDist: return {false, true, true, false};
    case Axiom::PAssoc: return {false, true, false, true, false};
    }
    return {};
}

std::string format_violation(const RawTables& raw, const AxiomViolation& v)
{
    const auto gamma = witness_gamma_positions(v.axiom);
    std::string out(axiom_name(v.axiom));
    out += '(';
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i)
            out += ',';
        out += gamma[i] ? raw.g_labels[v.witness[i]] : raw.m_labels[v.witness[i]];
    }
    return out + ')';
}

namespace {

std::atomic<std::uint64_t> next_instance_id{1};

[[noreturn]] void malformed(const std::string& what)
{
    throw Error(ErrorCode::MalformedTable, what);
}

void check_square(const std::vector<std::vector<std::int64_t>>& table, std::size_t rows, std::size_t range,
                  const char* which)
{
    if (table.size() != rows)
        malformed(std::string(which) + ": expected " + std::to_string(rows) + " rows, got " +
                  std::to_string(table.size()));
    for (std::size_t i = 0; i < rows; ++i) {
        if (table[i].size() != rows)
            malformed(std::string(which) + "[" + std::to_string(i) + "]: expected " + std::to_string(rows) +
                      " entries, got " + std::to_string(table[i].size()));
        for (std::size_t j = 0; j < rows; ++j)
            if (table[i][j] < 0 || static_cast<std::uint64_t>(table[i][j]) >= range)
                malformed(std::string(which) + "[" + std::to_string(i) + "][" + std::to_string(j) +
                          "] = " + std::to_string(table[i][j]) + " is out of range");
    }
}

// Labels appear in comma-separated set literals, so they must be unique and
// free of the literal's punctuation.
void check_labels(const std::vector<std::string>& labels, const char* which)
{
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& l = labels[i];
        if (l.empty() || l.find_first_of(",{} \t\n") != std::string::npos)
            malformed(std::string(which) + " label " + std::to_string(i) + " ('" + l + "') is empty or has reserved characters");
        for (std::size_t j = 0; j < i; ++j)
            if (labels[j] == l)
                malformed(std::string(which) + " label '" + l + "' appears twice");
    }
}

// Flat byte tables; only valid after check_shape.
struct Tables {
    std::size_t n;
    std::size_t g;
    std::vector<std::uint8_t> add_m;
    std::vector<std::uint8_t> add_g;
    std::vector<std::uint8_t> prod;

    explicit Tables(const RawTables& raw)
        : n(raw.m_labels.size()), g(raw.g_labels.size()), add_m(n * n), add_g(g * g), prod(n * g * n)
    {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                add_m[i * n + j] = static_cast<std::uint8_t>(raw.add_m[i][j]);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j)
                add_g[i * g + j] = static_cast<std::uint8_t>(raw.add_g[i][j]);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t al = 0; al < g; ++al)
                for (std::size_t b = 0; b < n; ++b)
                    prod[(a * g + al) * n + b] = static_cast<std::uint8_t>(raw.prod[a][al][b]);
    }

    std::size_t am(std::size_t a, std::size_t b) const { return add_m[a * n + b]; }
    std::size_t ag(std::size_t a, std::size_t b) const { return add_g[a * g + b]; }
    std::size_t p(std::size_t a, std::size_t al, std::size_t b) const { return prod[(a * g + al) * n + b]; }
};

using Witness = std::vector<std::size_t>;

std::optional<Witness> first_comm(std::size_t size, auto&& op)
{
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
            if (op(a, b) != op(b, a))
                return Witness{a, b};
    return std::nullopt;
}

std::optional<Witness> first_assoc(std::size_t size, auto&& op)
{
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
            for (std::size_t c = 0; c < size; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    return Witness{a, b, c};
    return std::nullopt;
}

std::optional<Witness> first_violation(const Tables& t, Axiom axiom)
{
    const std::size_t n = t.n;
    const std::size_t g = t.g;
    switch (axiom) {
    case Axiom::CommM:
        return first_comm(n, [&](std::size_t a, std::size_t b) { return t.am(a, b); });
    case Axiom::AssocM:
        return first_assoc(n, [&](std::size_t a, std::size_t b) { return t.am(a, b); });
    case Axiom::CommG:
        return first_comm(g, [&](std::size_t a, std::size_t b) { return t.ag(a, b); });
    case Axiom::AssocG:
        return first_assoc(g, [&](std::size_t a, std::size_t b) { return t.ag(a, b); });
    case Axiom::LDist:
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t al = 0; al < g; ++al)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c)
                        if (t.p(a, al, t.am(b, c)) != t.am(t.p(a, al, b), t.p(a, al, c)))
                            return Witness{a, al, b, c};
        return std::nullopt;
    case Axiom::RDist:
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t al = 0; al < g; ++al)
                    for (std::size_t c = 0; c < n; ++c)
                        if (t.p(t.am(a, b), al, c) != t.am(t.p(a, al, c), t.p(b, al, c)))
                            return Witness{a, b, al, c};
        return std::nullopt;
    case Axiom::GDist:
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t al = 0; al < g; ++al)
                for (std::size_t be = 0; be < g; ++be)
                    for (std::size_t b = 0; b < n; ++b)
                        if (t.p(a, t.ag(al, be), b) != t.am(t.p(a, al, b), t.p(a, be, b)))
                            return Witness{a, al, be, b};
        return std::nullopt;
    case Axiom::PAssoc:
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t al = 0; al < g; ++al)
                for (std::size_t b = 0; b < n; ++b) {
                    const std::uint8_t* left = &t.prod[(t.p(a, al, b) * g) * n];
                    const std::uint8_t* outer = &t.prod[(a * g + al) * n];
                    for (std::size_t be = 0; be < g; ++be) {
                        const std::uint8_t* inner = &t.prod[(b * g + be) * n];
                        const std::uint8_t* lrow = left + be * n;
                        for (std::size_t c = 0; c < n; ++c)
                            if (lrow[c] != outer[inner[c]])
                                return Witness{a, al, b, be, c};
                    }
                }
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace

void check_shape(const RawTables& raw, std::size_t cap)
{
    const std::size_t n = raw.m_labels.size();
    const std::size_t g = raw.g_labels.size();
    if (n == 0)
        malformed("M must have at least one element");
    if (g == 0)
        malformed("Gamma must have at least one element");
    if (cap > kMaxCarrier)
        throw Error(ErrorCode::CapExceeded, "carrier cap cannot exceed " + std::to_string(kMaxCarrier));
    if (n > cap || g > cap)
        throw Error(ErrorCode::CapExceeded, "carrier sizes (" + std::to_string(n) + ", " + std::to_string(g) +
                                                ") exceed the cap of " + std::to_string(cap));
    check_labels(raw.m_labels, "M");
    check_labels(raw.g_labels, "Gamma");
    check_square(raw.add_m, n, n, "add_M");
    check_square(raw.add_g, g, g, "add_Gamma");
    if (raw.prod.size() != n)
        malformed("prod: expected " + std::to_string(n) + " planes, got " + std::to_string(raw.prod.size()));
    for (std::size_t a = 0; a < n; ++a) {
        if (raw.prod[a].size() != g)
            malformed("prod[" + std::to_string(a) + "]: expected " + std::to_string(g) + " rows, got " +
                      std::to_string(raw.prod[a].size()));
        for (std::size_t al = 0; al < g; ++al) {
            const auto& row = raw.prod[a][al];
            if (row.size() != n)
                malformed("prod[" + std::to_string(a) + "][" + std::to_string(al) + "]: expected " +
                          std::to_string(n) + " entries, got " + std::to_string(row.size()));
            for (std::size_t b = 0; b < n; ++b)
                if (row[b] < 0 || static_cast<std::uint64_t>(row[b]) >= n)
                    malformed("prod[" + std::to_string(a) + "][" + std::to_string(al) + "][" +
                              std::to_string(b) + "] = " + std::to_string(row[b]) + " is out of range");
        }
    }
}


bool replay(const RawTables& raw, const AxiomViolation& v)
{
    check_shape(raw, kMaxCarrier);
    const Tables t(raw);
    const auto& w = v.witness;
    const auto gamma = witness_gamma_positions(v.axiom);
    if (w.size() != gamma.size())
        return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] >= (gamma[i] ? t.g : t.n))
            return false;
    switch (v.axiom) {
    case Axiom::CommM: return t.am(w[0], w[1]) != t.am(w[1], w[0]);
    case Axiom::AssocM: return t.am(t.am(w[0], w[1]), w[2]) != t.am(w[0], t.am(w[1], w[2]));
    case Axiom::CommG: return t.ag(w[0], w[1]) != t.ag(w[1], w[0]);
    case Axiom::AssocG: return t.ag(t.ag(w[0], w[1]), w[2]) != t.ag(w[0], t.ag(w[1], w[2]));
    case Axiom::LDist:
        return t.p(w[0], w[1], t.am(w[2], w[3])) != t.am(t.p(w[0], w[1], w[2]), t.p(w[0], w[1], w[3]));
    case Axiom::RDist:
        return t.p(t.am(w[0], w[1]), w[2], w[3]) != t.am(t.p(w[0], w[2], w[3]), t.p(w[1], w[2], w[3]));
    case Axiom::GDist:
        return t.p(w[0], t.ag(w[1], w[2]), w[3]) != t.am(t.p(w[0], w[1], w[3]), t.p(w[0], w[2], w[3]));
    case Axiom::PAssoc:
        return t.p(t.p(w[0], w[1], w[2]), w[3], w[4]) != t.p(w[0], w[1], t.p(w[2], w[3], w[4]));
    }
    return false;
}

ValidationResult validate(const RawTables& raw, std::size_t cap)
{
    check_shape(raw, cap);
    Tables t(raw);

    ValidationResult result;
    for (Axiom axiom : kAllAxioms)
        if (auto w = first_violation(t, axiom))
            result.violations.push_back({axiom, std::move(*w)});
    if (!result.violations.empty())
        return result;

    GammaSemiring m;
    m.name_ = raw.name;
    m.m_labels_ = raw.m_labels;
    m.g_labels_ = raw.g_labels;
    m.n_ = t.n;
    m.g_ = t.g;
    m.add_m_ = std::move(t.add_m);
    m.add_g_ = std::move(t.add_g);
    m.prod_ = std::move(t.prod);
    m.id_ = next_instance_id.fetch_add(1);
    m.precompute();
    result.instance = std::move(m);
    return result;
}

GammaSemiring seal(const RawTables& raw, std::size_t cap)
{
    auto result = validate(raw, cap);
    if (result.ok())
        return std::move(*result.instance);
    std::ostringstream msg;
    msg << "axioms violated:";
    for (const auto& v : result.violations)
        msg << ' ' << format_violation(raw, v);
    throw Error(ErrorCode::AxiomViolation, msg.str());
}

void GammaSemiring::precompute()
{
    pair_products_.assign(n_ * n_, 0);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t al = 0; al < g_; ++al)
            for (std::size_t b = 0; b < n_; ++b)
                pair_products_[a * n_ + b] |= bit(mul(a, al, b));

    // a al m be c = (a al m) be c, so the words from a to c are the pair
    // products x..c over every x reachable as a al m.
    sandwich_words_.assign(n_ * n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
        Mask reach = 0;
        for (std::size_t m = 0; m < n_; ++m)
            reach |= pair_products(a, m);
        for (std::size_t c = 0; c < n_; ++c) {
            Mask words = 0;
            for_each_bit(reach, [&](std::size_t x) { words |= pair_products(x, c); });
            sandwich_words_[a * n_ + c] = words;
        }
    }
}

RawTables GammaSemiring::to_raw() const
{
    RawTables raw;
    raw.name = name_;
    raw.m_labels = m_labels_;
    raw.g_labels = g_labels_;
    raw.add_m.assign(n_, std::vector<std::int64_t>(n_));
    raw.add_g.assign(g_, std::vector<std::int64_t>(g_));
    raw.prod.assign(n_, std::vector<std::vector<std::int64_t>>(g_, std::vector<std::int64_t>(n_)));
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            raw.add_m[a][b] = static_cast<std::int64_t>(add(a, b));
    for (std::size_t a = 0; a < g_; ++a)
        for (std::size_t b = 0; b < g_; ++b)
            raw.add_g[a][b] = static_cast<std::int64_t>(gadd(a, b));
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t al = 0; al < g_; ++al)
            for (std::size_t b = 0; b < n_; ++b)
                raw.prod[a][al][b] = static_cast<std::int64_t>(mul(a, al, b));
    return raw;
}

GammaSemiring GammaSemiring::renamed(std::string name) const
{
    GammaSemiring copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

std::optional<std::size_t> GammaSemiring::find_label(std::string_view label) const
{
    for (std::size_t i = 0; i < n_; ++i)
        if (m_labels_[i] == label)
            return i;
    return std::nullopt;
}

std::optional<std::size_t> GammaSemiring::find_gamma_label(std::string_view label) const
{
    for (std::size_t i = 0; i < g_; ++i)
        if (g_labels_[i] == label)
            return i;
    return std::nullopt;
}

ElementSet::ElementSet(const GammaSemiring& owner, Mask members, Carrier carrier)
    : owner_(owner.id()), members_(members), carrier_(carrier)
{
    const Mask universe = carrier == Carrier::M ? owner.carrier() : owner.gamma_carrier();
    if (!is_subset(members, universe))
        throw Error(ErrorCode::MalformedTable, "element set mentions indices outside the carrier");
}

ElementSet ElementSet::from_indices(const GammaSemiring& owner, const std::vector<std::size_t>& indices,
                                    Carrier carrier)
{
    const std::size_t limit = carrier == Carrier::M ? owner.size() : owner.gamma_size();
    Mask m = 0;
    for (std::size_t i : indices) {
        if (i >= limit)
            throw Error(ErrorCode::MalformedTable, "element index " + std::to_string(i) + " is out of range");
        m |= bit(i);
    }
    return {owner, m, carrier};
}

std::vector<std::size_t> ElementSet::indices() const
{
    std::vector<std::size_t> out;
    for_each_bit(members_, [&](std::size_t i) { out.push_back(i); });
    return out;
}

void require_owner(const GammaSemiring& m, const ElementSet& s)
{
    if (s.owner_id() != m.id())
        throw Error(ErrorCode::OwnerMismatch, "element set belongs to a different instance than '" + m.name() + "'");
}

GammaSemiring restrict(const GammaSemiring& m, const ElementSet& s)
{
    require_owner(m, s);
    if (s.carrier() != Carrier::M)
        throw Error(ErrorCode::MalformedTable, "restrict needs a subset of M");
    if (s.empty())
        throw Error(ErrorCode::EmptyOperand, "cannot restrict to the empty set");
    const auto idx = s.indices();
    for (std::size_t a : idx)
        for (std::size_t b : idx)
            if (!s.contains(m.add(a, b)))
                throw Error(ErrorCode::NotClosed, m.m_labels()[a] + "+" + m.m_labels()[b] + "=" +
                                                      m.m_labels()[m.add(a, b)] + " is not in the set");
    for (std::size_t a : idx)
        for (std::size_t al = 0; al < m.gamma_size(); ++al)
            for (std::size_t b : idx)
                if (!s.contains(m.mul(a, al, b)))
                    throw Error(ErrorCode::NotClosed, m.m_labels()[a] + "*" + m.g_labels()[al] + "*" +
                                                          m.m_labels()[b] + "=" +
                                                          m.m_labels()[m.mul(a, al, b)] + " is not in the set");

    std::vector<std::size_t> position(m.size(), 0);
    for (std::size_t i = 0; i < idx.size(); ++i)
        position[idx[i]] = i;

    RawTables raw;
    raw.name = m.name() + "|restricted";
    raw.g_labels = m.g_labels();
    const std::size_t k = idx.size();
    const std::size_t g = m.gamma_size();
    raw.add_m.assign(k, std::vector<std::int64_t>(k));
    raw.prod.assign(k, std::vector<std::vector<std::int64_t>>(g, std::vector<std::int64_t>(k)));
    for (std::size_t i = 0; i < k; ++i) {
        raw.m_labels.push_back(m.m_labels()[idx[i]]);
        for (std::size_t j = 0; j < k; ++j) {
            raw.add_m[i][j] = static_cast<std::int64_t>(position[m.add(idx[i], idx[j])]);
            for (std::size_t al = 0; al < g; ++al)
                raw.prod[i][al][j] = static_cast<std::int64_t>(position[m.mul(idx[i], al, idx[j])]);
        }
    }
    raw.add_g.assign(g, std::vector<std::int64_t>(g));
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b)
            raw.add_g[a][b] = static_cast<std::int64_t>(m.gadd(a, b));
    return seal(raw);
}

} // namespace gsr
