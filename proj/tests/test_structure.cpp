#include "oracle.hpp"

#include "gsr/builders.hpp"
#include "gsr/render.hpp"
#include "gsr/structure.hpp"

#include <doctest.h>

using namespace gsr;

TEST_CASE("enumerate generalized bi-ideals of minmax(5,3)")
{
    const auto m = build_minmax(5, 3);
    std::vector<std::string> got;
    for (const auto& s : enumerate_ideals(m, IdealKind::GenBi))
        got.push_back(format_set(m, s.mask()));
    CHECK(got == std::vector<std::string>{"{1}", "{1,2}", "{1,2,3}", "{1,2,3,4}", "{1,2,3,5}", "{1,2,3,4,5}"});

    // closed form: S qualifies iff {1..min(k,3)} is inside S for each k in S
    std::vector<Mask> closed_form;
    for (Mask s = 1; s < 32; ++s) {
        bool ok = true;
        for_each_bit(s, [&](std::size_t k) { ok = ok && is_subset(full_mask(std::min<std::size_t>(k + 1, 3)), s); });
        if (ok)
            closed_form.push_back(s);
    }
    CHECK(kernel::enumerate_ideals(m, IdealKind::GenBi) == closed_form);
}

TEST_CASE("enumeration matches the oracle for every kind")
{
    for (const auto& m : {build_minmax(4, 2), build_zmod(8, {0, 2, 4, 6}), build_matrix(2, 1, 2)})
        for (std::size_t k = 0; k < kAllKinds.size(); ++k) {
            std::vector<Mask> expect;
            for (const auto& s : oracle::ideals(oracle::Tables(m), int(k)))
                expect.push_back(oracle::to_mask(s));
            CHECK(kernel::enumerate_ideals(m, kAllKinds[k]) == expect);
        }
}

TEST_CASE("z8v has {0} as unique minimal generalized bi-ideal")
{
    const auto z = build_zmod(8, {0, 2, 4, 6});
    const auto list = kernel::enumerate_ideals(z, IdealKind::GenBi);
    std::vector<Mask> minimal;
    for (Mask s : list)
        if (is_minimal(z, ElementSet(z, s), IdealKind::GenBi).minimal)
            minimal.push_back(s);
    CHECK(minimal == std::vector<Mask>{1});
    for (Mask s : list)
        CHECK(contains(s, 0));
}

TEST_CASE("enumeration cap")
{
    CHECK(enumerate_ideals(build_minmax(1, 1), IdealKind::GenBi).size() == 1);
    CHECK_THROWS_AS((void)enumerate_ideals(build_minmax(15, 1), IdealKind::GenBi), Error);
    CHECK_NOTHROW((void)enumerate_ideals(build_minmax(15, 1), IdealKind::GenBi, 15));
}

TEST_CASE("GB-simplicity")
{
    CHECK(is_gb_simple(build_minmax(1, 1)).verdict);

    const auto m = build_minmax(5, 3);
    const auto rec = is_gb_simple(m);
    CHECK_FALSE(rec.verdict);
    REQUIRE(rec.witness_element);
    CHECK(m.m_labels()[*rec.witness_element] == "1");
    CHECK(format_set(m, rec.witness_sandwich) == "{1}");
    CHECK(rec.only_whole_carrier == false);

    const auto z = build_zmod(8, {0, 2, 4, 6});
    const auto zr = is_gb_simple(z);
    CHECK_FALSE(zr.verdict);
    CHECK(*zr.witness_element == 0);
    CHECK(format_set(z, zr.witness_sandwich) == "{0}");

    // Z_p with full Gamma: a*1*m*1*a reaches every residue for a != 0, but 0 annihilates.
    CHECK_FALSE(is_gb_simple(build_zmod(5, {0, 1, 2, 3, 4})).verdict);
}

TEST_CASE("minimality")
{
    const auto m = build_minmax(5, 3);
    CHECK(is_minimal(m, ElementSet(m, 1), IdealKind::GenBi).minimal);
    const auto big = is_minimal(m, ElementSet::full(m), IdealKind::GenBi);
    CHECK_FALSE(big.minimal);
    REQUIRE(big.smaller);
    CHECK(big.smaller->mask() == 1);

    // whole carrier minimal iff GB-simple
    for (const auto& x : {build_minmax(1, 1), build_minmax(3, 2), build_zmod(8, {0, 2, 4, 6}), build_matrix(2, 1, 2)})
        CHECK(is_minimal(x, ElementSet::full(x), IdealKind::GenBi).minimal == is_gb_simple(x).verdict);

    const auto z = build_zmod(8, {0, 2, 4, 6});
    CHECK(is_minimal(z, ElementSet(z, 1), IdealKind::GenBi).minimal);

    try {
        (void)is_minimal(m, ElementSet(m, 0b10), IdealKind::GenBi);
        FAIL("expected KIND_NOT_SATISFIED");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::KindNotSatisfied);
    }
}

TEST_CASE("generalized bi-ideals are the fixed points of generation")
{
    for (const auto& m : {build_minmax(5, 3), build_zmod(8, {0, 2, 4, 6}), build_matrix(2, 1, 2)}) {
        const auto list = kernel::enumerate_ideals(m, IdealKind::GenBi);
        for (Mask s = 1; s <= m.carrier(); ++s) {
            const bool fixed = kernel::generated_gen_bi(m, s) == s;
            CHECK(fixed == std::binary_search(list.begin(), list.end(), s));
        }
    }
}
