#include "gsr/gsr.h"

#include "gsr/builders.hpp"
#include "gsr/census.hpp"
#include "gsr/interchange.hpp"
#include "gsr/isomorphism.hpp"
#include "gsr/render.hpp"
#include "gsr/report.hpp"
#include "gsr/setalg.hpp"
#include "gsr/structure.hpp"
#include "gsr/verify.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct gsr_instance {
    gsr::GammaSemiring m;
};

namespace {

thread_local std::string last_error;

gsr_status to_status(gsr::ErrorCode code)
{
    return static_cast<gsr_status>(static_cast<int>(code) + 1);
}

struct InvalidArgument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const char* what)
{
    if (!condition)
        throw InvalidArgument(what);
}

char* dup(const std::string& text)
{
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

gsr_instance* wrap(gsr::GammaSemiring m)
{
    return new gsr_instance{std::move(m)};
}

gsr::IdealKind kind_of(gsr_kind kind)
{
    require(kind >= GSR_KIND_SUB_GSR && kind <= GSR_KIND_GEN_BI, "unknown ideal kind");
    return gsr::kAllKinds[static_cast<std::size_t>(kind)];
}

gsr::ElementSet set_of(const gsr::GammaSemiring& m, std::uint64_t mask, gsr::Carrier carrier = gsr::Carrier::M)
{
    return gsr::ElementSet(m, mask, carrier);
}

gsr::Budget budget_of(const gsr_budget* b)
{
    gsr::Budget out;
    if (b) {
        out.full_enumeration_max_n = b->full_enumeration_max_n;
        out.max_evaluations = b->max_evaluations;
        out.max_witnesses = b->max_witnesses;
        out.enumeration_cap = b->enumeration_cap;
        out.workers = b->workers;
    }
    return out;
}

// Status codes other than INVALID_ARGUMENT and INTERNAL mirror the core error codes.
template <typename Fn>
gsr_status api(Fn&& fn)
{
    try {
        last_error.clear();
        fn();
        return GSR_OK;
    } catch (const InvalidArgument& e) {
        last_error = e.what();
        return GSR_INVALID_ARGUMENT;
    } catch (const gsr::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return GSR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return GSR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return GSR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* gsr_status_name(gsr_status status)
{
    switch (status) {
    case GSR_OK: return "OK";
    case GSR_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case GSR_INTERNAL: return "INTERNAL";
    default:
        if (status > GSR_OK && status < GSR_INVALID_ARGUMENT)
            return gsr::error_code_name(static_cast<gsr::ErrorCode>(status - 1)).data();
        return "UNKNOWN";
    }
}

const char* gsr_last_error(void)
{
    return last_error.c_str();
}

void gsr_string_free(char* text)
{
    std::free(text);
}

void gsr_masks_free(uint64_t* masks)
{
    std::free(masks);
}

void gsr_instance_free(gsr_instance* instance)
{
    delete instance;
}

gsr_status gsr_instance_load(const char* path, gsr_instance** out)
{
    return api([&] {
        require(path && out, "null argument");
        *out = wrap(gsr::load_instance(path));
    });
}

gsr_status gsr_instance_from_json(const char* text, gsr_instance** out)
{
    return api([&] {
        require(text && out, "null argument");
        *out = wrap(gsr::seal(gsr::parse_raw_json(text)));
    });
}

gsr_status gsr_instance_to_json(const gsr_instance* m, char** out)
{
    return api([&] {
        require(m && out, "null argument");
        *out = dup(gsr::to_json(m->m));
    });
}

gsr_status gsr_write_text(const char* path, const char* text)
{
    return api([&] {
        require(path && text, "null argument");
        gsr::write_file(path, text);
    });
}

gsr_status gsr_validate_json(const char* text, char** out_report)
{
    return api([&] {
        require(text && out_report, "null argument");
        const auto raw = gsr::parse_raw_json(text);
        const auto result = gsr::validate(raw);
        nlohmann::ordered_json doc;
        doc["ok"] = result.ok();
        doc["name"] = raw.name;
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& v : result.violations)
            list.push_back({{"axiom", std::string(gsr::axiom_name(v.axiom))},
                            {"witness", gsr::format_violation(raw, v)}});
        doc["violations"] = std::move(list);
        *out_report = dup(doc.dump());
    });
}

gsr_status gsr_build_minmax(size_t k, size_t g, gsr_instance** out)
{
    return api([&] {
        require(out, "null argument");
        *out = wrap(gsr::build_minmax(k, g));
    });
}

gsr_status gsr_build_zmod(size_t n, const size_t* residues, size_t count, gsr_instance** out)
{
    return api([&] {
        require(out && (residues || count == 0), "null argument");
        *out = wrap(gsr::build_zmod(n, std::vector<std::size_t>(residues, residues + count)));
    });
}

gsr_status gsr_build_matrix(size_t p, size_t rows, size_t cols, gsr_instance** out)
{
    return api([&] {
        require(out, "null argument");
        *out = wrap(gsr::build_matrix(p, rows, cols));
    });
}

size_t gsr_instance_size(const gsr_instance* m)
{
    return m ? m->m.size() : 0;
}

size_t gsr_instance_gamma_size(const gsr_instance* m)
{
    return m ? m->m.gamma_size() : 0;
}

const char* gsr_instance_name(const gsr_instance* m)
{
    return m ? m->m.name().c_str() : "";
}

const char* gsr_instance_label(const gsr_instance* m, size_t index)
{
    return m && index < m->m.size() ? m->m.m_labels()[index].c_str() : nullptr;
}

const char* gsr_instance_gamma_label(const gsr_instance* m, size_t index)
{
    return m && index < m->m.gamma_size() ? m->m.g_labels()[index].c_str() : nullptr;
}

size_t gsr_mul(const gsr_instance* m, size_t a, size_t alpha, size_t b)
{
    return m->m.mul(a, alpha, b);
}

size_t gsr_add(const gsr_instance* m, size_t a, size_t b)
{
    return m->m.add(a, b);
}

size_t gsr_gadd(const gsr_instance* m, size_t alpha, size_t beta)
{
    return m->m.gadd(alpha, beta);
}

gsr_status gsr_set_parse(const gsr_instance* m, const char* text, int gamma, uint64_t* out)
{
    return api([&] {
        require(m && text && out, "null argument");
        *out = gsr::parse_set(m->m, text, gamma ? gsr::Carrier::Gamma : gsr::Carrier::M);
    });
}

gsr_status gsr_set_format(const gsr_instance* m, uint64_t set, int gamma, char** out)
{
    return api([&] {
        require(m && out, "null argument");
        const auto carrier = gamma ? gsr::Carrier::Gamma : gsr::Carrier::M;
        *out = dup(gsr::format_set(m->m, set_of(m->m, set, carrier).mask(), carrier));
    });
}

gsr_status gsr_add_pointwise(const gsr_instance* m, uint64_t a, uint64_t b, uint64_t* out)
{
    return api([&] {
        require(m && out, "null argument");
        *out = gsr::add_pointwise(m->m, set_of(m->m, a), set_of(m->m, b)).mask();
    });
}

gsr_status gsr_additive_closure(const gsr_instance* m, uint64_t s, uint64_t* out)
{
    return api([&] {
        require(m && out, "null argument");
        *out = gsr::additive_closure(m->m, set_of(m->m, s)).mask();
    });
}

gsr_status gsr_gamma_product(const gsr_instance* m, uint64_t a, uint64_t lambda, uint64_t b, uint64_t* out)
{
    return api([&] {
        require(m && out, "null argument");
        *out = gsr::gamma_product(m->m, set_of(m->m, a), set_of(m->m, lambda, gsr::Carrier::Gamma), set_of(m->m, b))
                   .mask();
    });
}

gsr_status gsr_chain_product(const gsr_instance* m, const uint64_t* sets, size_t count, uint64_t* out)
{
    return api([&] {
        require(m && out && (sets || count == 0), "null argument");
        std::vector<gsr::ElementSet> list;
        for (size_t i = 0; i < count; ++i)
            list.push_back(set_of(m->m, sets[i]));
        *out = gsr::chain_product(m->m, list).mask();
    });
}

gsr_status gsr_kind_parse(const char* text, gsr_kind* out)
{
    return api([&] {
        require(text && out, "null argument");
        const auto kind = gsr::parse_kind(text);
        require(kind.has_value(), "unknown ideal kind");
        *out = static_cast<gsr_kind>(static_cast<int>(*kind));
    });
}

const char* gsr_kind_name(gsr_kind kind)
{
    if (kind < GSR_KIND_SUB_GSR || kind > GSR_KIND_GEN_BI)
        return "UNKNOWN";
    return gsr::kind_name(gsr::kAllKinds[static_cast<std::size_t>(kind)]).data();
}

gsr_status gsr_has_kind(const gsr_instance* m, uint64_t s, gsr_kind kind, int* holds, char** witness)
{
    return api([&] {
        require(m && holds, "null argument");
        const auto check = gsr::has_kind(m->m, set_of(m->m, s), kind_of(kind));
        *holds = check.holds ? 1 : 0;
        if (witness)
            *witness = check.witness ? dup(gsr::describe(m->m, *check.witness)) : nullptr;
    });
}

gsr_status gsr_generated_gen_bi(const gsr_instance* m, uint64_t a, uint64_t* out)
{
    return api([&] {
        require(m && out, "null argument");
        *out = gsr::generated_gen_bi(m->m, set_of(m->m, a)).mask();
    });
}

gsr_status gsr_sandwich(const gsr_instance* m, size_t a, uint64_t* out)
{
    return api([&] {
        require(m && out, "null argument");
        require(a < m->m.size(), "element index out of range");
        *out = gsr::sandwich(m->m, a).mask();
    });
}

gsr_status gsr_enumerate_ideals(const gsr_instance* m, gsr_kind kind, uint64_t** out, size_t* count)
{
    return api([&] {
        require(m && out && count, "null argument");
        const auto masks = gsr::kernel::enumerate_ideals(m->m, kind_of(kind));
        auto* buf = static_cast<uint64_t*>(std::malloc(std::max<std::size_t>(1, masks.size()) * sizeof(uint64_t)));
        if (!buf)
            throw std::bad_alloc();
        std::copy(masks.begin(), masks.end(), buf);
        *out = buf;
        *count = masks.size();
    });
}

gsr_status gsr_is_gb_simple(const gsr_instance* m, int* verdict, char** record)
{
    return api([&] {
        require(m && verdict, "null argument");
        const auto rec = gsr::is_gb_simple(m->m);
        *verdict = rec.verdict ? 1 : 0;
        if (!record)
            return;
        nlohmann::ordered_json doc;
        doc["gb_simple"] = rec.verdict;
        doc["only_whole_carrier"] =
            rec.only_whole_carrier ? nlohmann::ordered_json(*rec.only_whole_carrier) : nlohmann::ordered_json();
        doc["sandwich_is_whole"] = rec.sandwich_is_whole;
        doc["generated_is_whole"] = rec.generated_is_whole;
        if (rec.witness_element) {
            doc["witness_element"] = m->m.m_labels()[*rec.witness_element];
            doc["witness_sandwich"] = gsr::format_set(m->m, rec.witness_sandwich);
        } else {
            doc["witness_element"] = nullptr;
            doc["witness_sandwich"] = nullptr;
        }
        doc["proper_ideal"] = rec.proper_ideal ? nlohmann::ordered_json(gsr::format_set(m->m, *rec.proper_ideal))
                                               : nlohmann::ordered_json();
        *record = dup(doc.dump());
    });
}

gsr_status gsr_is_minimal(const gsr_instance* m, uint64_t s, gsr_kind kind, int* minimal, uint64_t* smaller)
{
    return api([&] {
        require(m && minimal, "null argument");
        const auto check = gsr::is_minimal(m->m, set_of(m->m, s), kind_of(kind));
        *minimal = check.minimal ? 1 : 0;
        if (smaller)
            *smaller = check.smaller ? check.smaller->mask() : 0;
    });
}

gsr_status gsr_restrict(const gsr_instance* m, uint64_t s, gsr_instance** out)
{
    return api([&] {
        require(m && out, "null argument");
        *out = wrap(gsr::restrict(m->m, set_of(m->m, s)));
    });
}

gsr_status gsr_are_isomorphic(const gsr_instance* a, const gsr_instance* b, int* result)
{
    return api([&] {
        require(a && b && result, "null argument");
        *result = gsr::are_isomorphic(a->m, b->m).has_value() ? 1 : 0;
    });
}

gsr_status gsr_canonical(const gsr_instance* m, gsr_instance** out)
{
    return api([&] {
        require(m && out, "null argument");
        *out = wrap(gsr::canonical_instance(m->m, m->m.name() + "|canonical"));
    });
}

void gsr_budget_default(gsr_budget* budget)
{
    if (!budget)
        return;
    const gsr::Budget d;
    budget->full_enumeration_max_n = d.full_enumeration_max_n;
    budget->max_evaluations = d.max_evaluations;
    budget->max_witnesses = d.max_witnesses;
    budget->enumeration_cap = d.enumeration_cap;
    budget->workers = d.workers;
}

gsr_status gsr_statement_ids(char** out)
{
    return api([&] {
        require(out, "null argument");
        nlohmann::json list = nlohmann::json::array();
        for (auto id : gsr::statement_ids())
            list.push_back(std::string(id));
        *out = dup(list.dump());
    });
}

gsr_status gsr_verify(const gsr_instance* m, const char* const* ids, size_t count, const gsr_budget* budget,
                      char** report, char** text, int* any_fail)
{
    return api([&] {
        require(m && (ids || count == 0), "null argument");
        std::vector<std::string_view> selected;
        for (size_t i = 0; i < count; ++i) {
            require(ids[i] != nullptr, "null statement id");
            if (!gsr::is_statement(ids[i]))
                throw gsr::Error(gsr::ErrorCode::UnknownStatement, std::string("unknown statement '") + ids[i] + "'");
            selected.emplace_back(ids[i]);
        }
        if (selected.empty())
            selected = gsr::statement_ids();
        const auto reports = gsr::verify_many(m->m, selected, budget_of(budget));
        if (report)
            *report = dup(gsr::verification_json(m->m, reports).dump(2) + "\n");
        if (text) {
            std::string lines;
            for (const auto& r : reports)
                lines += gsr::report_line(m->m, r) + "\n";
            *text = dup(lines);
        }
        if (any_fail) {
            *any_fail = 0;
            for (const auto& r : reports)
                if (r.verdict == gsr::Verdict::Fail)
                    *any_fail = 1;
        }
    });
}

gsr_status gsr_comm_semigroup_count(size_t n, size_t* out)
{
    return api([&] {
        require(out, "null argument");
        *out = gsr::enum_comm_semigroups(n).size();
    });
}

gsr_status gsr_enum_gamma_semirings(size_t n, size_t g, size_t workers, size_t cap_n, size_t cap_g, char** out)
{
    return api([&] {
        require(out, "null argument");
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& m : gsr::enum_gamma_semirings(n, g, workers, cap_n, cap_g))
            list.push_back(nlohmann::ordered_json::parse(gsr::to_json(m)));
        *out = dup(list.dump());
    });
}

gsr_status gsr_census(size_t max_n, size_t max_g, size_t workers, size_t cap_n, size_t cap_g, const char* out_dir,
                      char** summary)
{
    return api([&] {
        const auto census = gsr::census_report(max_n, max_g, workers, cap_n, cap_g);
        if (out_dir)
            gsr::write_census(census, out_dir);
        if (summary)
            *summary = dup(gsr::census_summary_json(census));
    });
}

} // extern "C"
