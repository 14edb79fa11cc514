#include "oracle.hpp"

#include "gsr/census.hpp"
#include "gsr/interchange.hpp"
#include "gsr/isomorphism.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>

using namespace gsr;

namespace {

// Commutative semigroup classes on n elements by brute force with a plain
// permutation dedup.
std::size_t naive_semigroup_classes(std::size_t n)
{
    std::set<std::vector<std::size_t>> keys;
    std::vector<std::size_t> e(n * n, 0);
    while (true) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b) {
                ok = e[a * n + b] == e[b * n + a];
                for (std::size_t c = 0; c < n && ok; ++c)
                    ok = e[e[a * n + b] * n + c] == e[a * n + e[b * n + c]];
            }
        if (ok) {
            std::vector<std::size_t> perm(n), best;
            for (std::size_t i = 0; i < n; ++i)
                perm[i] = i;
            do {
                std::vector<std::size_t> key(n * n);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        key[perm[a] * n + perm[b]] = perm[e[a * n + b]];
                if (best.empty() || key < best)
                    best = key;
            } while (std::next_permutation(perm.begin(), perm.end()));
            keys.insert(best);
        }
        std::size_t i = 0;
        while (i < e.size() && ++e[i] == n)
            e[i++] = 0;
        if (i == e.size())
            break;
    }
    return keys.size();
}

// Groups the full-cube filter output into isomorphism classes with the
// brute-force oracle and checks the search output against them.
void check_against_naive(std::size_t n, std::size_t g)
{
    const auto naive = oracle::all_valid_tables(n, g);
    std::vector<oracle::Tables> reps;
    for (const auto& raw : naive) {
        const oracle::Tables t(raw);
        bool known = false;
        for (const auto& r : reps)
            if (oracle::isomorphic(t, r)) {
                known = true;
                break;
            }
        if (!known)
            reps.push_back(t);
    }

    const auto emitted = enum_gamma_semirings(n, g);
    CHECK(emitted.size() == reps.size());
    for (const auto& rep : reps) {
        std::size_t matches = 0;
        for (const auto& m : emitted)
            matches += oracle::isomorphic(rep, oracle::Tables(m));
        CHECK(matches == 1);
    }
}

} // namespace

TEST_CASE("commutative semigroups")
{
    CHECK(enum_comm_semigroups(1).size() == 1);
    const auto two = enum_comm_semigroups(2);
    CHECK(two.size() == 3);
    CHECK(naive_semigroup_classes(2) == 3);
    CHECK(enum_comm_semigroups(3).size() == naive_semigroup_classes(3));
    for (const auto& t : enum_comm_semigroups(3))
        CHECK(canonical_semigroup(t) == t);
    CHECK_THROWS_AS((void)enum_comm_semigroups(5), Error);
}

TEST_CASE("(1,1) has exactly one class")
{
    CHECK(enum_gamma_semirings(1, 1).size() == 1);
}

TEST_CASE("(2,1) and (2,2) match the full-cube filter")
{
    check_against_naive(1, 2);
    check_against_naive(2, 1);
    check_against_naive(2, 2);
}

TEST_CASE("emitted instances are valid, canonical and pairwise distinct")
{
    for (auto [n, g] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 1}, {3, 2}}) {
        const auto list = enum_gamma_semirings(n, g);
        std::set<std::vector<std::uint8_t>> keys;
        for (const auto& m : list) {
            CHECK(oracle::violated_axioms(oracle::Tables(m)).empty());
            CHECK(canonical_instance(m, "c").same_tables(m));
            keys.insert(canonical_form(m).key);
        }
        CHECK(keys.size() == list.size());
    }
}

TEST_CASE("a relabeled instance matches exactly one class")
{
    std::mt19937 rng(5);
    const auto list = enum_gamma_semirings(3, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const auto& m = list[rng() % list.size()];
        Isomorphism iso = identity_isomorphism(m);
        std::shuffle(iso.phi.begin(), iso.phi.end(), rng);
        std::shuffle(iso.psi.begin(), iso.psi.end(), rng);
        const auto copy = seal(transport(m, iso));
        std::size_t hits = 0;
        for (const auto& c : list)
            hits += are_isomorphic(copy, c).has_value();
        CHECK(hits == 1);
    }
}

TEST_CASE("census output is deterministic across worker counts")
{
    const auto a = census_report(2, 2, 1);
    const auto b = census_report(2, 2, 3);
    CHECK(census_summary_json(a) == census_summary_json(b));
    CHECK(a.records.size() == 1 + 3 + 8 + 28);

    const auto dir = std::filesystem::temp_directory_path() / "gsr_census_test";
    std::filesystem::remove_all(dir);
    write_census(a, (dir / "a").string());
    write_census(b, (dir / "b").string());
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir / "a")) {
        ++files;
        const auto name = entry.path().filename();
        CHECK(read_file(entry.path().string()) == read_file((dir / "b" / name).string()));
    }
    CHECK(files == a.records.size() + 1);
    const auto first = load_instance((dir / "a" / census_file_name(a.records.front())).string());
    CHECK(first.same_tables(a.records.front().instance));
    std::filesystem::remove_all(dir);
}

TEST_CASE("census caps")
{
    CHECK_THROWS_AS((void)census_report(4, 1), Error);
    CHECK_THROWS_AS((void)enum_gamma_semirings(3, 3), Error);
    CHECK_NOTHROW((void)enum_gamma_semirings(1, 3, 1, 3, 3));
}
