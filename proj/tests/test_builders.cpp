#include "oracle.hpp"

#include "gsr/builders.hpp"

#include <doctest.h>

using namespace gsr;

namespace {

std::size_t idx(const GammaSemiring& m, const std::string& label)
{
    return m.find_label(label).value();
}

std::size_t gidx(const GammaSemiring& m, const std::string& label)
{
    return m.find_gamma_label(label).value();
}

} // namespace

TEST_CASE("minmax")
{
    const auto m = build_minmax(5, 3);
    CHECK(m.size() == 5);
    CHECK(m.gamma_size() == 3);
    CHECK(m.name() == "minmax(5,3)");
    CHECK(m.m_labels()[m.mul(idx(m, "4"), gidx(m, "2"), idx(m, "5"))] == "2");
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b) {
            CHECK(m.add(a, b) == std::max(a, b));
            for (std::size_t al = 0; al < 3; ++al)
                CHECK(m.mul(a, al, b) == std::min({a, al, b}));
        }

    const auto t = build_minmax(1, 1);
    CHECK(t.size() == 1);
    CHECK(t.mul(0, 0, 0) == 0);

    for (auto [k, g] : {std::pair<std::size_t, std::size_t>{0, 0}, {3, 4}, {3, 0}, {65, 1}})
        CHECK_THROWS_AS((void)build_minmax(k, g), Error);
}

TEST_CASE("zmod")
{
    const auto m = build_zmod(8, {0, 2, 4, 6});
    CHECK(m.name() == "zmod(8,{0,2,4,6})");
    CHECK(m.g_labels() == std::vector<std::string>{"0", "2", "4", "6"});
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b) {
            CHECK(m.add(a, b) == (a + b) % 8);
            for (std::size_t al = 0; al < 4; ++al)
                CHECK(m.mul(a, al, b) == (a * (2 * al) * b) % 8);
        }
    CHECK(build_zmod(8, {6, 0, 4, 2}).same_tables(m));

    try {
        (void)build_zmod(8, {2, 4, 6});
        FAIL("expected GAMMA_NOT_CLOSED");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GammaNotClosed);
        CHECK(std::string(e.what()).find("(4,4)") != std::string::npos);
    }

    const auto t = build_zmod(1, {0});
    CHECK(t.size() == 1);
    CHECK_THROWS_AS((void)build_zmod(8, {8}), Error);
    CHECK_THROWS_AS((void)build_zmod(8, {}), Error);
}

TEST_CASE("matrix")
{
    const auto m = build_matrix(2, 1, 2);
    CHECK(m.size() == 4);
    CHECK(m.gamma_size() == 4);
    CHECK(oracle::violated_axioms(oracle::Tables(m)).empty());

    // Zero matrix annihilates.
    const std::size_t zero = 0;
    for (std::size_t al = 0; al < 4; ++al)
        for (std::size_t b = 0; b < 4; ++b) {
            CHECK(m.mul(zero, al, b) == zero);
            CHECK(m.mul(b, al, zero) == zero);
        }

    // 1x2 row W, 2x1 column al, 1x2 row Y: W*al*Y = (W.al) Y over Z_2.
    auto digits = [](std::size_t v, std::size_t len) {
        std::vector<std::size_t> d(len);
        for (std::size_t i = 0; i < len; ++i)
            d[len - 1 - i] = (v >> i) & 1u;
        return d;
    };
    for (std::size_t w = 0; w < 4; ++w)
        for (std::size_t al = 0; al < 4; ++al)
            for (std::size_t y = 0; y < 4; ++y) {
                const auto W = digits(w, 2), A = digits(al, 2), Y = digits(y, 2);
                const std::size_t dot = (W[0] * A[0] + W[1] * A[1]) % 2;
                const std::size_t expect = (dot * Y[0]) << 1 | (dot * Y[1]);
                CHECK(m.mul(w, al, y) == expect);
            }

    CHECK_THROWS_AS((void)build_matrix(4, 1, 1), Error);
    try {
        (void)build_matrix(2, 3, 3);
        FAIL("expected CAP_EXCEEDED");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
    }
}

TEST_CASE("matrix(2,2,3) has 64 elements on each side and validates")
{
    const auto m = build_matrix(2, 2, 3);
    CHECK(m.size() == 64);
    CHECK(m.gamma_size() == 64);
    CHECK(validate(m.to_raw()).ok());
}
