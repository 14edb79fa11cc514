#include "gsr/verify.hpp"

#include "gsr/ideals.hpp"
#include "gsr/parallel.hpp"
#include "gsr/render.hpp"
#include "gsr/setalg.hpp"

#include <optional>

namespace gsr {

std::string_view verdict_name(Verdict v) noexcept
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::BudgetExhausted: return "BUDGET_EXHAUSTED";
    }
    return "UNKNOWN";
}

namespace {

using Tuple = std::array<Mask, 2>;
using Failure = std::optional<std::string>;

struct Context {
    const GammaSemiring& m;
    Budget budget;
    std::vector<Mask> universe;
    bool universe_truncated = false;
    std::array<std::vector<Mask>, kAllKinds.size()> by_kind;

    Context(const GammaSemiring& inst, const Budget& b) : m(inst), budget(b)
    {
        const std::size_t n = m.size();
        std::uint64_t count;
        if (n <= budget.full_enumeration_max_n && n < 63) {
            count = (std::uint64_t{1} << n) - 1;
        } else {
            const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
            count = std::min<std::uint64_t>(budget.max_evaluations, all);
            universe_truncated = count < all;
        }
        universe.resize(count);
        for (std::uint64_t i = 0; i < count; ++i)
            universe[i] = i + 1;

        auto flags = parallel_map(universe.size(), budget.workers, [&](std::size_t i) {
            std::uint8_t f = 0;
            for (std::size_t k = 0; k < kAllKinds.size(); ++k)
                if (kernel::has_kind(m, universe[i], kAllKinds[k]))
                    f |= static_cast<std::uint8_t>(1U << k);
            return f;
        });
        for (std::size_t i = 0; i < universe.size(); ++i)
            for (std::size_t k = 0; k < kAllKinds.size(); ++k)
                if (flags[i] & (1U << k))
                    by_kind[k].push_back(universe[i]);
    }

    const std::vector<Mask>& sets_of(IdealKind kind) const { return by_kind[static_cast<std::size_t>(kind)]; }
};

class Emitter {
public:
    explicit Emitter(std::uint64_t limit) : limit_(limit) {}

    bool operator()(Mask first, Mask second = 0)
    {
        if (items_.size() >= limit_) {
            truncated_ = true;
            return false;
        }
        items_.push_back({first, second});
        return true;
    }

    bool full() const { return truncated_; }
    std::vector<Tuple>& items() { return items_; }

private:
    std::uint64_t limit_;
    bool truncated_ = false;
    std::vector<Tuple> items_;
};

// ---- shared pieces of statement bodies ----

bool kind(const Context& c, Mask s, IdealKind k)
{
    return s != 0 && kernel::has_kind(c.m, s, k);
}

std::string why_not(const Context& c, Mask s, IdealKind k)
{
    auto check = has_kind(c.m, ElementSet{c.m, s}, k);
    return check.witness ? describe(c.m, *check.witness) : std::string("holds");
}

std::string set_text(const Context& c, Mask s)
{
    return format_set(c.m, s);
}

// S is a sub-Gamma-semiring whose restriction satisfies aGammaSGammaa = S for
// every a in S, i.e. the restricted instance is GB-simple.
bool restriction_gb_simple(const Context& c, Mask t)
{
    bool simple = true;
    for_each_bit(t, [&](std::size_t a) {
        simple = simple && kernel::sandwich(c.m, bit(a), t, bit(a)) == t;
    });
    return simple;
}

// Supersets of core inside t in increasing mask order; nonempty only.
bool emit_supersets(Emitter& emit, Mask t, Mask core)
{
    if (!is_subset(core, t))
        return true;
    const Mask free = t & ~core;
    Mask x = 0;
    while (true) {
        if ((core | x) != 0 && !emit(t, core | x))
            return false;
        if (x == free)
            return true;
        x = (x - free) & free;
    }
}

// ---- statement registry ----

struct Statement {
    std::string_view id;
    std::string_view summary;
    std::vector<Slot> slots;
    void (*generate)(const Context&, Emitter&);
    Failure (*body)(const Context&, const Tuple&);
};

constexpr Slot kSetS{"S", SlotType::Set};
constexpr Slot kElemA{"a", SlotType::Element};
constexpr Slot kSetT{"T", SlotType::Set};

Failure implication(const Context& c, Mask s, IdealKind from, IdealKind to)
{
    if (!kind(c, s, from) || kind(c, s, to))
        return std::nullopt;
    return std::string(kind_name(from)) + " but not " + std::string(kind_name(to)) + ": " + why_not(c, s, to);
}

// T ranges over sets of kind `outer`, A over subsets of T containing core(T);
// A must have kind `inner`. `var` names the second slot in the detail text.
Failure containment_body(const Context& c, const Tuple& t, IdealKind outer, Mask core, IdealKind inner,
                         std::string_view var = "A")
{
    const Mask big = t[0];
    const Mask a = t[1];
    if (!kind(c, big, outer) || !is_subset(core, a) || !is_subset(a, big) || a == 0)
        return std::nullopt;
    if (kind(c, a, inner))
        return std::nullopt;
    const std::string v(var);
    return "core " + set_text(c, core) + " <= " + v + " <= T but " + v + " is not " + std::string(kind_name(inner)) +
           ": " + why_not(c, a, inner);
}

Mask core_left(const Context& c, Mask t) { return kernel::product(c.m, c.m.carrier(), t); }
Mask core_both(const Context& c, Mask t)
{
    return kernel::product(c.m, c.m.carrier(), t) | kernel::product(c.m, t, c.m.carrier());
}
Mask core_meet(const Context& c, Mask t)
{
    return kernel::product(c.m, t, c.m.carrier()) & kernel::product(c.m, c.m.carrier(), t);
}
Mask core_sandwich(const Context& c, Mask t) { return kernel::sandwich(c.m, t, c.m.carrier(), t); }

// Largest T first, so T = M leads whenever M qualifies.
template <IdealKind Outer, Mask (*Core)(const Context&, Mask)>
void generate_containment(const Context& c, Emitter& emit)
{
    const auto& outer = c.sets_of(Outer);
    for (auto it = outer.rbegin(); it != outer.rend(); ++it)
        if (!emit_supersets(emit, *it, Core(c, *it)))
            return;
}

template <IdealKind Outer, Mask (*Core)(const Context&, Mask), IdealKind Inner>
Failure containment(const Context& c, const Tuple& t)
{
    return containment_body(c, t, Outer, Core(c, t[0]), Inner);
}

const std::vector<Statement>& registry()
{
    static const std::vector<Statement> statements{
        {"R18a", "every quasi-ideal is a bi-ideal", {kSetS},
         [](const Context& c, Emitter& emit) {
             for (Mask s : c.sets_of(IdealKind::Quasi))
                 if (!emit(s))
                     return;
         },
         [](const Context& c, const Tuple& t) { return implication(c, t[0], IdealKind::Quasi, IdealKind::Bi); }},

        {"R18b", "every bi-ideal is a generalized bi-ideal", {kSetS},
         [](const Context& c, Emitter& emit) {
             for (Mask s : c.sets_of(IdealKind::Bi))
                 if (!emit(s))
                     return;
         },
         [](const Context& c, const Tuple& t) { return implication(c, t[0], IdealKind::Bi, IdealKind::GenBi); }},

        {"CONSTR", "aGM, MGa and aGMGa are generalized bi-ideals", {kElemA},
         [](const Context& c, Emitter& emit) {
             for (std::size_t a = 0; a < c.m.size(); ++a)
                 if (!emit(a))
                     return;
         },
         [](const Context& c, const Tuple& t) -> Failure {
             const std::size_t a = t[0];
             const Mask all = c.m.carrier();
             const std::pair<const char*, Mask> sets[] = {
                 {"aGM", kernel::product(c.m, bit(a), all)},
                 {"MGa", kernel::product(c.m, all, bit(a))},
                 {"aGMGa", kernel::sandwich(c.m, bit(a), all, bit(a))},
             };
             for (const auto& [label, s] : sets)
                 if (!kind(c, s, IdealKind::GenBi))
                     return std::string(label) + " = " + set_text(c, s) + " is not GEN_BI: " +
                            why_not(c, s, IdealKind::GenBi);
             return std::nullopt;
         }},

        {"INTERSECT", "a nonempty intersection of generalized bi-ideals is one",
         {{"B1", SlotType::Set}, {"B2", SlotType::Set}},
         [](const Context& c, Emitter& emit) {
             const auto& gen = c.sets_of(IdealKind::GenBi);
             for (std::size_t i = 0; i < gen.size(); ++i)
                 for (std::size_t j = i + 1; j < gen.size(); ++j)
                     if ((gen[i] & gen[j]) != 0 && !emit(gen[i], gen[j]))
                         return;
         },
         [](const Context& c, const Tuple& t) -> Failure {
             const Mask meet = t[0] & t[1];
             if (meet == 0 || !kind(c, t[0], IdealKind::GenBi) || !kind(c, t[1], IdealKind::GenBi) ||
                 kind(c, meet, IdealKind::GenBi))
                 return std::nullopt;
             return "B1 n B2 = " + set_text(c, meet) + " is not GEN_BI: " + why_not(c, meet, IdealKind::GenBi);
         }},

        {"SMALLEST", "(A) = A u AGMGA is the smallest generalized bi-ideal containing A",
         {{"A", SlotType::Set}, {"C", SlotType::Set}},
         [](const Context& c, Emitter& emit) {
             const auto& gen = c.sets_of(IdealKind::GenBi);
             for (Mask a : c.universe) {
                 if (!emit(a))
                     return;
                 for (Mask g : gen)
                     if (is_subset(a, g) && !emit(a, g))
                         return;
             }
         },
         [](const Context& c, const Tuple& t) -> Failure {
             const Mask a = t[0];
             const Mask gen = kernel::generated_gen_bi(c.m, a);
             if (t[1] == 0) {
                 if (!is_subset(a, gen))
                     return "(A) = " + set_text(c, gen) + " does not contain A";
                 if (!kind(c, gen, IdealKind::GenBi))
                     return "(A) = " + set_text(c, gen) + " is not GEN_BI: " + why_not(c, gen, IdealKind::GenBi);
                 return std::nullopt;
             }
             if (!is_subset(a, t[1]) || !kind(c, t[1], IdealKind::GenBi) || is_subset(gen, t[1]))
                 return std::nullopt;
             return "(A) = " + set_text(c, gen) + " is not inside the generalized bi-ideal C";
         }},

        {"SANDWICH_REL", "(aGTGa) n T is a generalized bi-ideal of the sub-Gamma-semiring T", {kSetT, kElemA},
         [](const Context& c, Emitter& emit) {
             for (Mask t : c.sets_of(IdealKind::SubGsr))
                 for (std::size_t a = 0; a < c.m.size(); ++a)
                     if (!emit(t, a))
                         return;
         },
         [](const Context& c, const Tuple& t) -> Failure {
             const Mask sub = t[0];
             const std::size_t a = t[1];
             if (!kind(c, sub, IdealKind::SubGsr))
                 return std::nullopt;
             const Mask x = kernel::sandwich(c.m, bit(a), sub, bit(a)) & sub;
             if (x == 0)
                 return std::nullopt;
             const Mask inner = kernel::sandwich(c.m, x, sub, x);
             if (is_subset(inner, x))
                 return std::nullopt;
             return "X = " + set_text(c, x) + " but XGTGX = " + set_text(c, inner) + " is not inside X";
         }},

        {"P52", "every subset of T containing MGT is a sub-Gamma-semiring", {kSetT, {"A", SlotType::Set}},
         generate_containment<IdealKind::SubGsr, core_left>,
         containment<IdealKind::SubGsr, core_left, IdealKind::SubGsr>},

        {"P6", "every subset of T containing MGT u TGM is a Gamma-ideal", {kSetT, {"A", SlotType::Set}},
         generate_containment<IdealKind::GammaIdeal, core_both>,
         containment<IdealKind::GammaIdeal, core_both, IdealKind::GammaIdeal>},

        {"P7", "every subset of T containing TGM n MGT is a quasi-ideal", {kSetT, {"A", SlotType::Set}},
         generate_containment<IdealKind::Quasi, core_meet>,
         containment<IdealKind::Quasi, core_meet, IdealKind::Quasi>},

        {"P71", "every D with TGMGT <= D <= T and DGD <= D is a bi-ideal", {kSetT, {"D", SlotType::Set}},
         generate_containment<IdealKind::Bi, core_sandwich>,
         [](const Context& c, const Tuple& t) -> Failure {
             const Mask d = t[1];
             if (d == 0 || !is_subset(kernel::product(c.m, d, d), d))
                 return std::nullopt;
             return containment_body(c, t, IdealKind::Bi, core_sandwich(c, t[0]), IdealKind::Bi, "D");
         }},

        {"P8", "every subset of T containing TGMGT is a generalized bi-ideal", {kSetT, {"E", SlotType::Set}},
         generate_containment<IdealKind::GenBi, core_sandwich>,
         [](const Context& c, const Tuple& t) -> Failure {
             return containment_body(c, t, IdealKind::GenBi, core_sandwich(c, t[0]), IdealKind::GenBi, "E");
         }},

        {"SIMPLE_EQ", "GB-simple <=> aGMGa = M for all a <=> (a) = M for all a", {kSetT},
         [](const Context& c, Emitter& emit) {
             for (Mask t : c.sets_of(IdealKind::SubGsr))
                 if (!emit(t))
                     return;
         },
         [](const Context& c, const Tuple& t) -> Failure {
             if (!kind(c, t[0], IdealKind::SubGsr))
                 return std::nullopt;
             const GammaSemiring sub = restrict(c.m, ElementSet{c.m, t[0]});
             try {
                 const auto rec = is_gb_simple(sub, c.budget.enumeration_cap);
                 // the restatement: M = aGMGa for all a iff GB-simple
                 if (rec.only_whole_carrier && *rec.only_whole_carrier != rec.sandwich_is_whole)
                     return std::string("restatement disagrees with the definition");
             } catch (const Error& e) {
                 if (e.code() != ErrorCode::EquivalenceBroken)
                     throw;
                 return std::string(e.what());
             }
             return std::nullopt;
         }},

        {"L38", "a GB-simple sub-Gamma-semiring T meeting a generalized bi-ideal B lies inside B",
         {kSetT, {"B", SlotType::Set}},
         [](const Context& c, Emitter& emit) {
             const auto& gen = c.sets_of(IdealKind::GenBi);
             for (Mask t : c.sets_of(IdealKind::SubGsr)) {
                 if (!restriction_gb_simple(c, t))
                     continue;
                 for (Mask b : gen)
                     if ((t & b) != 0 && !emit(t, b))
                         return;
             }
         },
         [](const Context& c, const Tuple& t) -> Failure {
             const Mask sub = t[0];
             const Mask b = t[1];
             if ((sub & b) == 0 || !kind(c, sub, IdealKind::SubGsr) || !kind(c, b, IdealKind::GenBi) ||
                 !restriction_gb_simple(c, sub) || is_subset(sub, b))
                 return std::nullopt;
             return "T is GB-simple and meets B, but " + set_text(c, sub & ~b) + " lies outside B";
         }},

        {"TRANSLATE", "BGA and AGB are generalized bi-ideals", {{"B", SlotType::Set}, {"A", SlotType::Set}},
         [](const Context& c, Emitter& emit) {
             for (Mask b : c.sets_of(IdealKind::GenBi))
                 for (Mask a : c.universe)
                     if (!emit(b, a))
                         return;
         },
         [](const Context& c, const Tuple& t) -> Failure {
             const Mask b = t[0];
             const Mask a = t[1];
             if (a == 0 || !kind(c, b, IdealKind::GenBi))
                 return std::nullopt;
             const Mask ba = kernel::product(c.m, b, a);
             if (!kind(c, ba, IdealKind::GenBi))
                 return "BGA = " + set_text(c, ba) + " is not GEN_BI: " + why_not(c, ba, IdealKind::GenBi);
             const Mask ab = kernel::product(c.m, a, b);
             if (!kind(c, ab, IdealKind::GenBi))
                 return "AGB = " + set_text(c, ab) + " is not GEN_BI: " + why_not(c, ab, IdealKind::GenBi);
             return std::nullopt;
         }},

        {"MIN_EQ_SIMPLE", "a bi-ideal is a minimal generalized bi-ideal iff it is GB-simple", {{"B", SlotType::Set}},
         [](const Context& c, Emitter& emit) {
             for (Mask b : c.sets_of(IdealKind::Bi))
                 if (!emit(b))
                     return;
         },
         [](const Context& c, const Tuple& t) -> Failure {
             const Mask b = t[0];
             if (!kind(c, b, IdealKind::Bi))
                 return std::nullopt;
             if (!kind(c, b, IdealKind::GenBi))
                 return std::string("B is BI but not GEN_BI");
             const ElementSet set{c.m, b};
             const bool minimal = is_minimal(c.m, set, IdealKind::GenBi, c.budget.enumeration_cap).minimal;
             const bool simple = is_gb_simple(restrict(c.m, set), c.budget.enumeration_cap).verdict;
             if (minimal == simple)
                 return std::nullopt;
             return std::string("minimal=") + (minimal ? "yes" : "no") + " but GB-simple=" + (simple ? "yes" : "no");
         }},

        {"T311", "all proper generalized bi-ideals minimal iff distinct proper ones are disjoint", {},
         [](const Context&, Emitter& emit) { emit(0); },
         [](const Context& c, const Tuple&) -> Failure {
             std::vector<Mask> proper;
             for (Mask s : c.sets_of(IdealKind::GenBi))
                 if (s != c.m.carrier())
                     proper.push_back(s);
             if (proper.empty())
                 return std::nullopt;
             // the universe is closed under subsets, so a proper subset of
             // the same kind is always on the list
             std::optional<std::pair<Mask, Mask>> nested;
             std::optional<std::pair<Mask, Mask>> overlapping;
             for (Mask s : proper)
                 for (Mask r : proper) {
                     if (r != s && is_subset(r, s) && !nested)
                         nested = {r, s};
                     if (r < s && (r & s) != 0 && !overlapping)
                         overlapping = {r, s};
                 }
             const bool all_minimal = !nested;
             const bool all_disjoint = !overlapping;
             if (all_minimal == all_disjoint)
                 return std::nullopt;
             if (!all_minimal)
                 return "pairwise disjoint, yet " + set_text(c, nested->first) + " sits inside " +
                        set_text(c, nested->second);
             return "all minimal, yet " + set_text(c, overlapping->first) + " meets " +
                    set_text(c, overlapping->second);
         }},
    };
    return statements;
}

const Statement& lookup(std::string_view id)
{
    for (const auto& s : registry())
        if (s.id == id)
            return s;
    throw Error(ErrorCode::UnknownStatement, "unknown statement '" + std::string(id) + "'");
}

VerificationReport run(const Context& c, const Statement& st)
{
    VerificationReport rep;
    rep.statement_id = std::string(st.id);
    rep.instance = c.m.name();
    rep.universe_size = c.universe.size();

    Emitter emit(c.budget.max_evaluations);
    st.generate(c, emit);
    auto& items = emit.items();
    rep.evaluations = items.size();
    rep.truncated = emit.full() || c.universe_truncated;

    auto results = parallel_map(items.size(), c.budget.workers, [&](std::size_t i) { return st.body(c, items[i]); });
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!results[i])
            continue;
        ++rep.counterexamples;
        if (c.budget.max_witnesses == 0 || rep.witnesses.size() < c.budget.max_witnesses)
            rep.witnesses.push_back({rep.statement_id, items[i], std::move(*results[i])});
    }
    rep.verdict = rep.counterexamples ? Verdict::Fail : (rep.truncated ? Verdict::BudgetExhausted : Verdict::Pass);
    return rep;
}

} // namespace

const std::vector<std::string_view>& statement_ids()
{
    static const std::vector<std::string_view> ids = [] {
        std::vector<std::string_view> out;
        for (const auto& s : registry())
            out.push_back(s.id);
        return out;
    }();
    return ids;
}

bool is_statement(std::string_view id)
{
    for (const auto& s : registry())
        if (s.id == id)
            return true;
    return false;
}

const std::vector<Slot>& statement_slots(std::string_view id)
{
    return lookup(id).slots;
}

std::string_view statement_summary(std::string_view id)
{
    return lookup(id).summary;
}

VerificationReport verify(const GammaSemiring& m, std::string_view statement_id, const Budget& budget)
{
    return verify_many(m, {statement_id}, budget).front();
}

std::vector<VerificationReport> verify_many(const GammaSemiring& m, const std::vector<std::string_view>& ids,
                                            const Budget& budget)
{
    std::vector<const Statement*> chosen;
    for (auto id : ids)
        chosen.push_back(&lookup(id));
    const Context c(m, budget);
    std::vector<VerificationReport> out;
    for (const auto* st : chosen)
        out.push_back(run(c, *st));
    return out;
}

bool replay(const GammaSemiring& m, const Witness& witness, const Budget& budget)
{
    const Statement& st = lookup(witness.statement);
    const Mask all = m.carrier();
    for (std::size_t i = 0; i < st.slots.size(); ++i) {
        const Mask v = witness.values[i];
        if (st.slots[i].type == SlotType::Element ? v >= m.size() : !is_subset(v, all))
            return false;
    }
    // bodies read only their bindings, except T311 which reads the universe
    Budget scope = budget;
    if (!st.slots.empty()) {
        scope.full_enumeration_max_n = 0;
        scope.max_evaluations = 0;
    }
    const Context c(m, scope);
    return st.body(c, witness.values).has_value();
}

} // namespace gsr
