#include "gsr/ideals.hpp"

#include "gsr/setalg.hpp"

#include <algorithm>
#include <cctype>

namespace gsr {

std::string_view kind_name(IdealKind kind) noexcept
{
    switch (kind) {
    case IdealKind::SubGsr: return "SUB_GSR";
    case IdealKind::GammaIdeal: return "GAMMA_IDEAL";
    case IdealKind::Quasi: return "QUASI";
    case IdealKind::Bi: return "BI";
    case IdealKind::GenBi: return "GEN_BI";
    }
    return "UNKNOWN";
}

std::string_view kind_flag(IdealKind kind) noexcept
{
    switch (kind) {
    case IdealKind::SubGsr: return "sub-gsr";
    case IdealKind::GammaIdeal: return "gamma-ideal";
    case IdealKind::Quasi: return "quasi";
    case IdealKind::Bi: return "bi";
    case IdealKind::GenBi: return "gen-bi";
    }
    return "unknown";
}

std::optional<IdealKind> parse_kind(std::string_view text) noexcept
{
    std::string norm;
    for (char c : text)
        norm += c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (IdealKind k : kAllKinds)
        if (kind_flag(k) == norm)
            return k;
    return std::nullopt;
}

std::size_t evaluate_term(const GammaSemiring& m, const Term& term)
{
    std::size_t value = term.at(0);
    for (std::size_t i = 1; i + 1 < term.size(); i += 2)
        value = m.mul(value, term[i], term[i + 1]);
    return value;
}

std::size_t evaluate_sum(const GammaSemiring& m, const std::vector<Term>& terms)
{
    std::size_t value = evaluate_term(m, terms.at(0));
    for (std::size_t i = 1; i < terms.size(); ++i)
        value = m.add(value, evaluate_term(m, terms[i]));
    return value;
}

namespace kernel {

bool has_kind(const GammaSemiring& m, Mask s, IdealKind kind)
{
    const Mask all = m.carrier();
    switch (kind) {
    case IdealKind::SubGsr:
        return sum_closed(m, s) && is_subset(elementary(m, s, s), s);
    case IdealKind::GammaIdeal:
        return sum_closed(m, s) && is_subset(elementary(m, all, s) | elementary(m, s, all), s);
    case IdealKind::Quasi:
        return has_kind(m, s, IdealKind::SubGsr) && is_subset(product(m, s, all) & product(m, all, s), s);
    case IdealKind::Bi:
        return has_kind(m, s, IdealKind::SubGsr) && is_subset(sandwich(m, s, all, s), s);
    case IdealKind::GenBi:
        return is_subset(sandwich(m, s, all, s), s);
    }
    return false;
}

Mask generated_gen_bi(const GammaSemiring& m, Mask a)
{
    return a | sandwich(m, a, m.carrier(), a);
}

} // namespace kernel

namespace {

// First term (in factor order) producing each element; empty when none does.
using Generators = std::vector<std::optional<Term>>;

void note(Generators& gens, std::size_t value, Term term)
{
    if (!gens[value])
        gens[value] = std::move(term);
}

Generators products(const GammaSemiring& m, Mask a, Mask b)
{
    Generators gens(m.size());
    for_each_bit(a, [&](std::size_t x) {
        for (std::size_t al = 0; al < m.gamma_size(); ++al)
            for_each_bit(b, [&](std::size_t y) { note(gens, m.mul(x, al, y), {x, al, y}); });
    });
    return gens;
}

Generators sandwiches(const GammaSemiring& m, Mask a, Mask mid, Mask c)
{
    Generators gens(m.size());
    for_each_bit(a, [&](std::size_t x) {
        for (std::size_t al = 0; al < m.gamma_size(); ++al)
            for_each_bit(mid, [&](std::size_t y) {
                const std::size_t xy = m.mul(x, al, y);
                for (std::size_t be = 0; be < m.gamma_size(); ++be)
                    for_each_bit(c, [&](std::size_t z) { note(gens, m.mul(xy, be, z), {x, al, y, be, z}); });
            });
    });
    return gens;
}

// Expresses target as a sum of generator terms by re-running the closure
// with parent pointers.
std::vector<Term> derive(const GammaSemiring& m, const Generators& gens, std::size_t target)
{
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    const std::size_t n = m.size();
    std::vector<std::pair<std::size_t, std::size_t>> parent(n, {none, none});
    Mask closed = 0;
    for (std::size_t e = 0; e < n; ++e)
        if (gens[e])
            closed |= bit(e);
    Mask frontier = closed;
    while (frontier != 0 && !contains(closed, target)) {
        const std::size_t x = lowest(frontier);
        frontier &= frontier - 1;
        for_each_bit(closed, [&](std::size_t y) {
            const std::size_t z = m.add(x, y);
            if (!contains(closed, z)) {
                closed |= bit(z);
                frontier |= bit(z);
                parent[z] = {x, y};
            }
        });
    }
    std::vector<Term> out;
    auto expand = [&](auto&& self, std::size_t e) -> void {
        if (gens[e]) {
            out.push_back(*gens[e]);
            return;
        }
        self(self, parent[e].first);
        self(self, parent[e].second);
    };
    expand(expand, target);
    return out;
}

KindWitness sum_witness(const GammaSemiring& m, Mask s, Mask bad)
{
    const std::size_t e = lowest(bad);
    KindWitness w{"sum", e, {}};
    for_each_bit(s, [&](std::size_t a) {
        for_each_bit(s, [&](std::size_t b) {
            if (w.derivations.empty() && m.add(a, b) == e)
                w.derivations.push_back({Term{a}, Term{b}});
        });
    });
    return w;
}

KindWitness product_witness(const GammaSemiring& m, const char* clause, Mask a, Mask b, Mask bad)
{
    const std::size_t e = lowest(bad);
    return {clause, e, {{*products(m, a, b)[e]}}};
}

std::optional<KindWitness> check_sub_gsr(const GammaSemiring& m, Mask s)
{
    if (Mask bad = kernel::sum(m, s, s) & ~s)
        return sum_witness(m, s, bad);
    if (Mask bad = kernel::elementary(m, s, s) & ~s)
        return product_witness(m, "product", s, s, bad);
    return std::nullopt;
}

std::optional<KindWitness> check_sandwich(const GammaSemiring& m, const char* clause, Mask s)
{
    const Mask all = m.carrier();
    if (Mask bad = kernel::sandwich(m, s, all, s) & ~s) {
        const std::size_t e = lowest(bad);
        return KindWitness{clause, e, {derive(m, sandwiches(m, s, all, s), e)}};
    }
    return std::nullopt;
}

std::optional<KindWitness> find_witness(const GammaSemiring& m, Mask s, IdealKind kind)
{
    const Mask all = m.carrier();
    switch (kind) {
    case IdealKind::SubGsr:
        return check_sub_gsr(m, s);
    case IdealKind::GammaIdeal:
        if (Mask bad = kernel::sum(m, s, s) & ~s)
            return sum_witness(m, s, bad);
        if (Mask bad = kernel::elementary(m, all, s) & ~s)
            return product_witness(m, "left", all, s, bad);
        if (Mask bad = kernel::elementary(m, s, all) & ~s)
            return product_witness(m, "right", s, all, bad);
        return std::nullopt;
    case IdealKind::Quasi: {
        if (auto w = check_sub_gsr(m, s))
            return w;
        if (Mask bad = kernel::product(m, s, all) & kernel::product(m, all, s) & ~s) {
            const std::size_t e = lowest(bad);
            return KindWitness{"quasi", e, {derive(m, products(m, s, all), e), derive(m, products(m, all, s), e)}};
        }
        return std::nullopt;
    }
    case IdealKind::Bi:
        if (auto w = check_sub_gsr(m, s))
            return w;
        return check_sandwich(m, "bi", s);
    case IdealKind::GenBi:
        return check_sandwich(m, "gen-bi", s);
    }
    return std::nullopt;
}

void require_nonempty(const GammaSemiring& m, const ElementSet& s)
{
    require_owner(m, s);
    if (s.carrier() != Carrier::M)
        throw Error(ErrorCode::MalformedTable, "expected a subset of M");
    if (s.empty())
        throw Error(ErrorCode::EmptyOperand, "operand set is empty");
}

void require_element(const GammaSemiring& m, std::size_t a)
{
    if (a >= m.size())
        throw Error(ErrorCode::MalformedTable, "element index " + std::to_string(a) + " is out of range");
}

} // namespace

KindCheck has_kind(const GammaSemiring& m, const ElementSet& s, IdealKind kind)
{
    require_nonempty(m, s);
    KindCheck out;
    out.witness = find_witness(m, s.mask(), kind);
    out.holds = !out.witness.has_value();
    return out;
}

ElementSet generated_gen_bi(const GammaSemiring& m, const ElementSet& a)
{
    require_nonempty(m, a);
    return {m, kernel::generated_gen_bi(m, a.mask())};
}

ElementSet principal_left(const GammaSemiring& m, std::size_t a)
{
    require_element(m, a);
    return {m, kernel::product(m, bit(a), m.carrier())};
}

ElementSet principal_right(const GammaSemiring& m, std::size_t a)
{
    require_element(m, a);
    return {m, kernel::product(m, m.carrier(), bit(a))};
}

ElementSet sandwich(const GammaSemiring& m, std::size_t a)
{
    require_element(m, a);
    return {m, kernel::sandwich(m, bit(a), m.carrier(), bit(a))};
}

std::optional<ElementSet> sandwich_relative(const GammaSemiring& m, const ElementSet& t, std::size_t a)
{
    require_nonempty(m, t);
    require_element(m, a);
    if (!kernel::has_kind(m, t.mask(), IdealKind::SubGsr))
        throw Error(ErrorCode::NotSubGsr, "T is not a sub-Gamma-semiring");
    const Mask out = kernel::sandwich(m, bit(a), t.mask(), bit(a)) & t.mask();
    if (out == 0)
        return std::nullopt;
    return ElementSet{m, out};
}

std::pair<ElementSet, ElementSet> translate(const GammaSemiring& m, const ElementSet& b, const ElementSet& a)
{
    require_nonempty(m, b);
    require_nonempty(m, a);
    if (!kernel::has_kind(m, b.mask(), IdealKind::GenBi))
        throw Error(ErrorCode::NotGenBi, "B is not a generalized bi-Gamma-ideal");
    return {ElementSet{m, kernel::product(m, b.mask(), a.mask())}, ElementSet{m, kernel::product(m, a.mask(), b.mask())}};
}

} // namespace gsr
