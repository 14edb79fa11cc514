// gsr: command-line front end over the C interface.
#include "gsr/gsr.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

// Raised for any input or usage problem; carries the text for stderr.
struct InputError {
    std::string message;
};

struct InstanceFree {
    void operator()(gsr_instance* m) const { gsr_instance_free(m); }
};
using Instance = std::unique_ptr<gsr_instance, InstanceFree>;

void check(gsr_status status)
{
    if (status != GSR_OK)
        throw InputError{std::string(gsr_status_name(status)) + ": " + gsr_last_error()};
}

std::string take(char* text)
{
    std::string out = text ? text : "";
    gsr_string_free(text);
    return out;
}

std::vector<std::size_t> parse_numbers(const std::string& text)
{
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" {"));
        item.erase(item.find_last_not_of(" }") + 1);
        if (item.empty())
            continue;
        try {
            std::size_t used = 0;
            const auto value = std::stoull(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(static_cast<std::size_t>(value));
        } catch (const std::exception&) {
            throw InputError{"not a number: '" + item + "'"};
        }
    }
    return out;
}

// minmax(5,3) | zmod(8,{0,2,4,6}) | matrix(2,1,2)
Instance build_from_spec(const std::string& spec)
{
    static const std::regex form(R"(\s*(minmax|zmod|matrix)\s*\((.*)\)\s*)");
    std::smatch match;
    if (!std::regex_match(spec, match, form))
        throw InputError{"unrecognized builder spec '" + spec + "' (expected minmax(k,g), zmod(n,{..}) or matrix(p,r,c))"};
    const std::string family = match[1];
    const std::string args = match[2];
    gsr_instance* out = nullptr;
    if (family == "zmod") {
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw InputError{"zmod needs a modulus and a residue list"};
        const auto n = parse_numbers(args.substr(0, comma));
        const auto residues = parse_numbers(args.substr(comma + 1));
        if (n.size() != 1)
            throw InputError{"zmod needs one modulus"};
        check(gsr_build_zmod(n[0], residues.data(), residues.size(), &out));
    } else {
        const auto v = parse_numbers(args);
        if (family == "minmax") {
            if (v.size() != 2)
                throw InputError{"minmax takes (k,g)"};
            check(gsr_build_minmax(v[0], v[1], &out));
        } else {
            if (v.size() != 3)
                throw InputError{"matrix takes (p,rows,cols)"};
            check(gsr_build_matrix(v[0], v[1], v[2], &out));
        }
    }
    return Instance(out);
}

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError{"IO_ERROR: cannot read '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Loads with a full axiom report on failure.
Instance load_file(const std::string& path)
{
    const std::string text = read_text(path);
    char* report = nullptr;
    check(gsr_validate_json(text.c_str(), &report));
    const auto doc = nlohmann::json::parse(take(report));
    if (!doc["ok"].get<bool>()) {
        std::string msg = "AXIOM_VIOLATION: " + path;
        for (const auto& v : doc["violations"])
            msg += "\n  " + v["axiom"].get<std::string>() + " first witness " + v["witness"].get<std::string>();
        throw InputError{msg};
    }
    gsr_instance* out = nullptr;
    check(gsr_instance_from_json(text.c_str(), &out));
    return Instance(out);
}

struct Source {
    std::string file;
    std::string builder;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("file", file, "Instance file (interchange JSON)");
        cmd->add_option("--builder,-b", builder, "Builder spec, e.g. minmax(5,3), zmod(8,{0,2,4,6}), matrix(2,1,2)");
    }

    Instance load() const
    {
        if (file.empty() == builder.empty())
            throw InputError{"give exactly one instance source: a file or --builder"};
        return file.empty() ? build_from_spec(builder) : load_file(file);
    }
};

std::string fmt_set(const gsr_instance* m, std::uint64_t s)
{
    char* out = nullptr;
    check(gsr_set_format(m, s, 0, &out));
    return take(out);
}

std::uint64_t parse_set(const gsr_instance* m, const std::string& text)
{
    std::uint64_t out = 0;
    check(gsr_set_parse(m, text.c_str(), 0, &out));
    return out;
}

gsr_kind parse_kind(const std::string& text)
{
    gsr_kind kind{};
    if (gsr_kind_parse(text.c_str(), &kind) != GSR_OK)
        throw InputError{"unknown kind '" + text + "' (sub-gsr, gamma-ideal, quasi, bi, gen-bi)"};
    return kind;
}

std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width)
        s.resize(width, ' ');
    return s;
}

std::string show_text(const gsr_instance* m)
{
    const std::size_t n = gsr_instance_size(m);
    const std::size_t g = gsr_instance_gamma_size(m);
    std::size_t w = 1;
    for (std::size_t i = 0; i < n; ++i)
        w = std::max(w, std::string(gsr_instance_label(m, i)).size());
    for (std::size_t i = 0; i < g; ++i)
        w = std::max(w, std::string(gsr_instance_gamma_label(m, i)).size());
    w += 1;

    std::ostringstream out;
    out << "name: " << gsr_instance_name(m) << "\n|M| = " << n << ", |Gamma| = " << g << "\n";
    auto table = [&](const char* title, std::size_t size, auto label, auto op) {
        out << title << "\n" << pad("", w);
        for (std::size_t j = 0; j < size; ++j)
            out << pad(label(j), w);
        out << "\n";
        for (std::size_t i = 0; i < size; ++i) {
            out << pad(label(i), w);
            for (std::size_t j = 0; j < size; ++j)
                out << pad(op(i, j), w);
            out << "\n";
        }
    };
    auto mlabel = [&](std::size_t i) { return std::string(gsr_instance_label(m, i)); };
    auto glabel = [&](std::size_t i) { return std::string(gsr_instance_gamma_label(m, i)); };
    table("add_M:", n, mlabel, [&](std::size_t a, std::size_t b) { return mlabel(gsr_add(m, a, b)); });
    table("add_Gamma:", g, glabel, [&](std::size_t a, std::size_t b) { return glabel(gsr_gadd(m, a, b)); });
    for (std::size_t al = 0; al < g; ++al)
        table(("prod a " + glabel(al) + " b:").c_str(), n, mlabel,
              [&](std::size_t a, std::size_t b) { return mlabel(gsr_mul(m, a, al, b)); });
    return out.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite Gamma-semiring toolkit"};
    app.require_subcommand(1);
    std::string out; // buffered, flushed once
    int code = kExitOk;

    // validate
    Source validate_src;
    auto* validate_cmd = app.add_subcommand("validate", "Check all eight axiom families");
    validate_src.attach(validate_cmd);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Write a builder instance as interchange JSON");
    gen_cmd->require_subcommand(1);
    std::string gen_out;
    std::size_t gk = 0, gg = 0, gn = 0, gp = 0, grows = 0, gcols = 0;
    std::string ggamma;
    auto* gen_minmax = gen_cmd->add_subcommand("minmax", "M = {1..k}, Gamma = {1..g}, max and min");
    gen_minmax->add_option("--k", gk)->required();
    gen_minmax->add_option("--g", gg)->required();
    auto* gen_zmod = gen_cmd->add_subcommand("zmod", "Z_n with a closed residue set as Gamma");
    gen_zmod->add_option("--n", gn)->required();
    gen_zmod->add_option("--gamma", ggamma, "Comma-separated residues")->required();
    auto* gen_matrix = gen_cmd->add_subcommand("matrix", "rows x cols matrices over Z_p");
    gen_matrix->add_option("--p", gp)->required();
    gen_matrix->add_option("--rows", grows)->required();
    gen_matrix->add_option("--cols", gcols)->required();
    for (auto* sub : {gen_minmax, gen_zmod, gen_matrix})
        sub->add_option("-o,--output", gen_out, "Output file (stdout when absent)");

    // show
    Source show_src;
    bool show_json = false;
    auto* show_cmd = app.add_subcommand("show", "Print the operation tables");
    show_src.attach(show_cmd);
    show_cmd->add_flag("--json", show_json, "Interchange JSON instead of tables");

    // closure
    Source closure_src;
    std::string closure_set;
    bool closure_gen_bi = false;
    bool closure_json = false;
    auto* closure_cmd = app.add_subcommand("closure", "Additive closure of a set");
    closure_src.attach(closure_cmd);
    closure_cmd->add_option("--set", closure_set, "Comma-separated labels")->required();
    closure_cmd->add_flag("--gen-bi", closure_gen_bi, "Smallest generalized bi-ideal containing the set instead");
    closure_cmd->add_flag("--json", closure_json, "Machine-readable JSON output");

    // ideals
    Source ideals_src;
    std::string ideals_kind;
    bool ideals_json = false;
    auto* ideals_cmd = app.add_subcommand("ideals", "Enumerate every subset of one ideal kind");
    ideals_src.attach(ideals_cmd);
    ideals_cmd->add_option("--kind", ideals_kind, "sub-gsr, gamma-ideal, quasi, bi, gen-bi")->required();
    ideals_cmd->add_flag("--json", ideals_json, "Machine-readable JSON output");

    // simple
    Source simple_src;
    bool simple_json = false;
    auto* simple_cmd = app.add_subcommand("simple", "Decide GB-simplicity");
    simple_src.attach(simple_cmd);
    simple_cmd->add_flag("--json", simple_json, "Machine-readable JSON output");

    // minimal
    Source minimal_src;
    std::string minimal_kind;
    std::string minimal_set;
    bool minimal_json = false;
    auto* minimal_cmd = app.add_subcommand("minimal", "Decide minimality of a set within its kind");
    minimal_src.attach(minimal_cmd);
    minimal_cmd->add_option("--kind", minimal_kind)->required();
    minimal_cmd->add_option("--set", minimal_set)->required();
    minimal_cmd->add_flag("--json", minimal_json, "Machine-readable JSON output");

    // verify
    Source verify_src;
    std::vector<std::string> statements{"ALL"};
    gsr_budget budget;
    gsr_budget_default(&budget);
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "Search for counterexamples to registered statements");
    verify_src.attach(verify_cmd);
    verify_cmd->add_option("--statement,-s", statements, "ALL or statement ids")->delimiter(',')->allow_extra_args(false);
    verify_cmd->add_option("--budget", budget.max_evaluations, "Assignments per statement");
    verify_cmd->add_option("--full-max-n", budget.full_enumeration_max_n, "Largest n with a full subset universe");
    verify_cmd->add_option("--witnesses", budget.max_witnesses, "Witnesses kept per statement (0 keeps all)");
    verify_cmd->add_option("--workers", budget.workers, "Worker threads (0 = all cores)");
    verify_cmd->add_flag("--json", verify_json, "Machine-readable JSON output");

    // census
    std::size_t max_n = 3, max_g = 2, cap_n = 3, cap_g = 2, census_workers = 1;
    std::string census_out;
    auto* census_cmd = app.add_subcommand("census", "Enumerate small Gamma-semirings up to isomorphism");
    census_cmd->add_option("--max-n", max_n, "Largest |M| to enumerate");
    census_cmd->add_option("--max-g", max_g, "Largest |Gamma| to enumerate");
    census_cmd->add_option("--cap-n", cap_n, "Largest admissible |M|");
    census_cmd->add_option("--cap-g", cap_g, "Largest admissible |Gamma|");
    census_cmd->add_option("--out", census_out, "Output directory");
    census_cmd->add_option("--workers", census_workers, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*validate_cmd) {
            auto m = validate_src.load();
            out += std::string("valid: ") + gsr_instance_name(m.get()) + " (|M| = " +
                   std::to_string(gsr_instance_size(m.get())) + ", |Gamma| = " +
                   std::to_string(gsr_instance_gamma_size(m.get())) + ")\n";
        } else if (*gen_cmd) {
            gsr_instance* raw = nullptr;
            if (*gen_minmax)
                check(gsr_build_minmax(gk, gg, &raw));
            else if (*gen_zmod) {
                const auto residues = parse_numbers(ggamma);
                check(gsr_build_zmod(gn, residues.data(), residues.size(), &raw));
            } else
                check(gsr_build_matrix(gp, grows, gcols, &raw));
            Instance m(raw);
            char* text = nullptr;
            check(gsr_instance_to_json(m.get(), &text));
            const std::string json = take(text);
            if (gen_out.empty())
                out += json;
            else {
                check(gsr_write_text(gen_out.c_str(), json.c_str()));
                out += "wrote " + gen_out + "\n";
            }
        } else if (*show_cmd) {
            auto m = show_src.load();
            if (show_json) {
                char* text = nullptr;
                check(gsr_instance_to_json(m.get(), &text));
                out += take(text);
            } else
                out += show_text(m.get());
        } else if (*closure_cmd) {
            auto m = closure_src.load();
            const auto s = parse_set(m.get(), closure_set);
            std::uint64_t result = 0;
            check(closure_gen_bi ? gsr_generated_gen_bi(m.get(), s, &result)
                                 : gsr_additive_closure(m.get(), s, &result));
            if (closure_json)
                out += nlohmann::json{{"set", fmt_set(m.get(), s)},
                                      {closure_gen_bi ? "generated_gen_bi" : "closure", fmt_set(m.get(), result)}}
                           .dump() +
                       "\n";
            else
                out += fmt_set(m.get(), result) + "\n";
        } else if (*ideals_cmd) {
            auto m = ideals_src.load();
            const auto kind = parse_kind(ideals_kind);
            std::uint64_t* masks = nullptr;
            std::size_t count = 0;
            check(gsr_enumerate_ideals(m.get(), kind, &masks, &count));
            std::vector<std::uint64_t> list(masks, masks + count);
            gsr_masks_free(masks);
            if (ideals_json) {
                nlohmann::ordered_json doc;
                doc["instance"] = gsr_instance_name(m.get());
                doc["kind"] = gsr_kind_name(kind);
                doc["count"] = count;
                doc["sets"] = nlohmann::json::array();
                for (auto s : list)
                    doc["sets"].push_back(fmt_set(m.get(), s));
                out += doc.dump(2) + "\n";
            } else {
                for (auto s : list)
                    out += fmt_set(m.get(), s) + "\n";
                out += std::to_string(count) + " " + gsr_kind_name(kind) + " sets\n";
            }
        } else if (*simple_cmd) {
            auto m = simple_src.load();
            int verdict = 0;
            char* record = nullptr;
            check(gsr_is_gb_simple(m.get(), &verdict, &record));
            const std::string rec = take(record);
            if (simple_json)
                out += nlohmann::ordered_json::parse(rec).dump(2) + "\n";
            else {
                out += std::string("GB-simple: ") + (verdict ? "yes" : "no") + "\n";
                const auto doc = nlohmann::json::parse(rec);
                if (!verdict && !doc["witness_element"].is_null())
                    out += "witness: a = " + doc["witness_element"].get<std::string>() +
                           ", a Gamma M Gamma a = " + doc["witness_sandwich"].get<std::string>() + "\n";
            }
        } else if (*minimal_cmd) {
            auto m = minimal_src.load();
            const auto kind = parse_kind(minimal_kind);
            const auto s = parse_set(m.get(), minimal_set);
            int minimal = 0;
            std::uint64_t smaller = 0;
            check(gsr_is_minimal(m.get(), s, kind, &minimal, &smaller));
            if (minimal_json) {
                nlohmann::ordered_json doc;
                doc["set"] = fmt_set(m.get(), s);
                doc["kind"] = gsr_kind_name(kind);
                doc["minimal"] = minimal != 0;
                doc["smaller"] = minimal ? nlohmann::ordered_json() : nlohmann::ordered_json(fmt_set(m.get(), smaller));
                out += doc.dump(2) + "\n";
            } else {
                out += std::string("minimal: ") + (minimal ? "yes" : "no") + "\n";
                if (!minimal)
                    out += "smaller: " + fmt_set(m.get(), smaller) + "\n";
            }
        } else if (*verify_cmd) {
            auto m = verify_src.load();
            std::vector<const char*> ids;
            for (const auto& s : statements)
                if (s != "ALL" && s != "all")
                    ids.push_back(s.c_str());
            char* report = nullptr;
            char* text = nullptr;
            int any_fail = 0;
            check(gsr_verify(m.get(), ids.data(), ids.size(), &budget, verify_json ? &report : nullptr,
                             verify_json ? nullptr : &text, &any_fail));
            out += verify_json ? take(report) : take(text);
            code = any_fail ? kExitFail : kExitOk;
        } else if (*census_cmd) {
            char* summary = nullptr;
            check(gsr_census(max_n, max_g, census_workers, cap_n, cap_g,
                             census_out.empty() ? nullptr : census_out.c_str(), &summary));
            const std::string text = take(summary);
            if (census_out.empty())
                out += text;
            else {
                const auto doc = nlohmann::json::parse(text);
                out += "classes: " + std::to_string(doc["total_classes"].get<std::size_t>()) + "\n";
                for (const auto& s : doc["statements"])
                    out += pad(s["id"].get<std::string>(), 14) +
                           " failing classes=" + std::to_string(s["failing_classes"].get<std::size_t>()) + "\n";
                out += "wrote " + census_out + "\n";
            }
        }
    } catch (const InputError& e) {
        std::cout << out << std::flush;
        std::cerr << e.message << "\n";
        return kExitInput;
    }

    std::cout << out << std::flush;
    return code;
}
