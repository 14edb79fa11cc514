// Exercises the shared library through its C header only.
#include "gsr/gsr.h"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <filesystem>
#include <string>

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    gsr_string_free(s);
    return out;
}

struct Handle {
    gsr_instance* p = nullptr;
    ~Handle() { gsr_instance_free(p); }
};

uint64_t parse(const gsr_instance* m, const char* text)
{
    uint64_t out = 0;
    REQUIRE(gsr_set_parse(m, text, 0, &out) == GSR_OK);
    return out;
}

std::string fmt(const gsr_instance* m, uint64_t s)
{
    char* out = nullptr;
    REQUIRE(gsr_set_format(m, s, 0, &out) == GSR_OK);
    return take(out);
}

} // namespace

TEST_CASE("status names")
{
    CHECK(std::string(gsr_status_name(GSR_OK)) == "OK");
    CHECK(std::string(gsr_status_name(GSR_MALFORMED_TABLE)) == "MALFORMED_TABLE");
    CHECK(std::string(gsr_status_name(GSR_AXIOM_VIOLATION)) == "AXIOM_VIOLATION");
    CHECK(std::string(gsr_status_name(GSR_GAMMA_NOT_CLOSED)) == "GAMMA_NOT_CLOSED");
    CHECK(std::string(gsr_status_name(GSR_INVALID_ARGUMENT)) == "INVALID_ARGUMENT");
}

TEST_CASE("builders and set operations")
{
    Handle m;
    REQUIRE(gsr_build_minmax(5, 3, &m.p) == GSR_OK);
    CHECK(gsr_instance_size(m.p) == 5);
    CHECK(gsr_instance_gamma_size(m.p) == 3);
    CHECK(std::string(gsr_instance_name(m.p)) == "minmax(5,3)");
    CHECK(std::string(gsr_instance_label(m.p, gsr_mul(m.p, 3, 1, 4))) == "2");

    uint64_t out = 0;
    REQUIRE(gsr_gamma_product(m.p, parse(m.p, "2"), 0b111, parse(m.p, "5"), &out) == GSR_OK);
    CHECK(fmt(m.p, out) == "{1,2}");
    REQUIRE(gsr_add_pointwise(m.p, parse(m.p, "1,2"), parse(m.p, "3"), &out) == GSR_OK);
    CHECK(fmt(m.p, out) == "{3}");
    const uint64_t chain[3] = {parse(m.p, "3"), 0b11111, parse(m.p, "3")};
    REQUIRE(gsr_chain_product(m.p, chain, 3, &out) == GSR_OK);
    CHECK(fmt(m.p, out) == "{1,2,3}");
    CHECK(gsr_chain_product(m.p, chain, 1, &out) == GSR_LENGTH_TOO_SHORT);
    CHECK(gsr_additive_closure(m.p, 0, &out) == GSR_EMPTY_OPERAND);
    CHECK(std::string(gsr_last_error()).size() > 0);
    REQUIRE(gsr_generated_gen_bi(m.p, parse(m.p, "5"), &out) == GSR_OK);
    CHECK(fmt(m.p, out) == "{1,2,3,5}");
    REQUIRE(gsr_sandwich(m.p, 2, &out) == GSR_OK);
    CHECK(fmt(m.p, out) == "{1,2,3}");
    CHECK(gsr_set_parse(m.p, "9", 0, &out) == GSR_MALFORMED_TABLE);
}

TEST_CASE("ideals, simplicity and minimality")
{
    Handle m;
    REQUIRE(gsr_build_minmax(5, 3, &m.p) == GSR_OK);
    gsr_kind kind{};
    REQUIRE(gsr_kind_parse("gen-bi", &kind) == GSR_OK);
    CHECK(kind == GSR_KIND_GEN_BI);
    CHECK(gsr_kind_parse("nope", &kind) == GSR_INVALID_ARGUMENT);

    uint64_t* masks = nullptr;
    size_t count = 0;
    REQUIRE(gsr_enumerate_ideals(m.p, GSR_KIND_GEN_BI, &masks, &count) == GSR_OK);
    CHECK(count == 6);
    CHECK(masks[0] == 1);
    CHECK(masks[5] == 0b11111);
    gsr_masks_free(masks);

    int holds = -1;
    char* witness = nullptr;
    REQUIRE(gsr_has_kind(m.p, parse(m.p, "2"), GSR_KIND_GEN_BI, &holds, &witness) == GSR_OK);
    CHECK(holds == 0);
    CHECK(take(witness).find("not in set") != std::string::npos);

    int verdict = -1;
    char* record = nullptr;
    REQUIRE(gsr_is_gb_simple(m.p, &verdict, &record) == GSR_OK);
    CHECK(verdict == 0);
    const auto rec = nlohmann::json::parse(take(record));
    CHECK(rec["witness_element"] == "1");
    CHECK(rec["witness_sandwich"] == "{1}");

    int minimal = -1;
    uint64_t smaller = 0;
    REQUIRE(gsr_is_minimal(m.p, 0b11111, GSR_KIND_GEN_BI, &minimal, &smaller) == GSR_OK);
    CHECK(minimal == 0);
    CHECK(smaller == 1);
    CHECK(gsr_is_minimal(m.p, 0b10, GSR_KIND_GEN_BI, &minimal, &smaller) == GSR_KIND_NOT_SATISFIED);

    Handle r;
    CHECK(gsr_restrict(m.p, parse(m.p, "1,3"), &r.p) == GSR_NOT_CLOSED);
    REQUIRE(gsr_restrict(m.p, parse(m.p, "1,2,3"), &r.p) == GSR_OK);
    CHECK(gsr_instance_size(r.p) == 3);
}

TEST_CASE("interchange and validation")
{
    Handle m;
    REQUIRE(gsr_build_zmod(8, std::array<size_t, 4>{0, 2, 4, 6}.data(), 4, &m.p) == GSR_OK);
    char* text = nullptr;
    REQUIRE(gsr_instance_to_json(m.p, &text) == GSR_OK);
    const std::string json = take(text);

    Handle back;
    REQUIRE(gsr_instance_from_json(json.c_str(), &back.p) == GSR_OK);
    int iso = 0;
    REQUIRE(gsr_are_isomorphic(m.p, back.p, &iso) == GSR_OK);
    CHECK(iso == 1);

    const auto path = (std::filesystem::temp_directory_path() / "gsr_capi.json").string();
    REQUIRE(gsr_write_text(path.c_str(), json.c_str()) == GSR_OK);
    Handle loaded;
    REQUIRE(gsr_instance_load(path.c_str(), &loaded.p) == GSR_OK);
    std::filesystem::remove(path);
    CHECK(gsr_instance_load("/nonexistent.json", &loaded.p) == GSR_IO_ERROR);

    char* report = nullptr;
    REQUIRE(gsr_validate_json(json.c_str(), &report) == GSR_OK);
    CHECK(nlohmann::json::parse(take(report))["ok"] == true);

    auto doc = nlohmann::json::parse(json);
    doc["add_M"][0][1] = 2;
    const auto broken = doc.dump();
    REQUIRE(gsr_validate_json(broken.c_str(), &report) == GSR_OK);
    const auto rep = nlohmann::json::parse(take(report));
    CHECK(rep["ok"] == false);
    CHECK(rep["violations"][0]["axiom"] == "COMM_M");
    Handle bad;
    CHECK(gsr_instance_from_json(broken.c_str(), &bad.p) == GSR_AXIOM_VIOLATION);
    doc["prod"][0][0][0] = 8;
    CHECK(gsr_validate_json(doc.dump().c_str(), &report) == GSR_MALFORMED_TABLE);

    Handle g;
    CHECK(gsr_build_zmod(8, std::array<size_t, 3>{2, 4, 6}.data(), 3, &g.p) == GSR_GAMMA_NOT_CLOSED);
    CHECK(std::string(gsr_last_error()).find("(4,4)") != std::string::npos);
    CHECK(gsr_build_matrix(2, 3, 3, &g.p) == GSR_CAP_EXCEEDED);
    CHECK(gsr_build_minmax(2, 3, &g.p) == GSR_BAD_BOUNDS);
    CHECK(gsr_build_minmax(2, 1, nullptr) == GSR_INVALID_ARGUMENT);
}

TEST_CASE("verification")
{
    Handle m;
    REQUIRE(gsr_build_zmod(8, std::array<size_t, 4>{0, 2, 4, 6}.data(), 4, &m.p) == GSR_OK);
    gsr_budget budget;
    gsr_budget_default(&budget);
    CHECK(budget.full_enumeration_max_n == 12);
    budget.max_witnesses = 0;

    const char* ids[] = {"P52", "P8"};
    char* report = nullptr;
    char* text = nullptr;
    int any_fail = 0;
    REQUIRE(gsr_verify(m.p, ids, 2, &budget, &report, &text, &any_fail) == GSR_OK);
    CHECK(any_fail == 1);
    const auto doc = nlohmann::json::parse(take(report));
    CHECK(doc["instance"] == "zmod(8,{0,2,4,6})");
    CHECK(doc["statements"][0]["verdict"] == "FAIL");
    CHECK(doc["statements"][0]["witnesses"][0]["bindings"]["A"] == "{0,1,2,4,6}");
    CHECK(doc["statements"][1]["verdict"] == "PASS");
    CHECK(take(text).find("P8") != std::string::npos);

    const char* bad[] = {"NOPE"};
    CHECK(gsr_verify(m.p, bad, 1, &budget, nullptr, nullptr, nullptr) == GSR_UNKNOWN_STATEMENT);

    char* all = nullptr;
    REQUIRE(gsr_statement_ids(&all) == GSR_OK);
    CHECK(nlohmann::json::parse(take(all)).size() == 16);
}

TEST_CASE("census")
{
    size_t count = 0;
    REQUIRE(gsr_comm_semigroup_count(2, &count) == GSR_OK);
    CHECK(count == 3);
    CHECK(gsr_comm_semigroup_count(5, &count) == GSR_CAP_EXCEEDED);

    char* list = nullptr;
    REQUIRE(gsr_enum_gamma_semirings(2, 1, 1, 3, 2, &list) == GSR_OK);
    CHECK(nlohmann::json::parse(take(list)).size() == 8);

    char* summary = nullptr;
    REQUIRE(gsr_census(2, 1, 1, 3, 2, nullptr, &summary) == GSR_OK);
    const auto doc = nlohmann::json::parse(take(summary));
    CHECK(doc["total_classes"] == 9);
    CHECK(gsr_census(4, 1, 1, 3, 2, nullptr, &summary) == GSR_CAP_EXCEEDED);
}
