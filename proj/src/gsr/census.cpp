#include "gsr/census.hpp"

#include "gsr/interchange.hpp"
#include "gsr/isomorphism.hpp"
#include "gsr/parallel.hpp"
#include "gsr/report.hpp"
#include "gsr/structure.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <numeric>

namespace gsr {

namespace {

bool associative(const SemigroupTable& t)
{
    for (std::size_t a = 0; a < t.order; ++a)
        for (std::size_t b = 0; b < t.order; ++b)
            for (std::size_t c = 0; c < t.order; ++c)
                if (t(t(a, b), c) != t(a, t(b, c)))
                    return false;
    return true;
}

// Backtracking over the product cube of fixed additive structures. Entries
// are filled in row-major order [a][alpha][b]; after each placement every
// axiom instance whose entries are all placed is checked.
class CubeSearch {
public:
    CubeSearch(const SemigroupTable& add_m, const SemigroupTable& add_g)
        : am_(add_m), ag_(add_g), n_(add_m.order), g_(add_g.order), cube_(n_ * g_ * n_, kFree)
    {
        // distributivity instances reference fixed cube cells; file each
        // under the last cell it needs
        checks_.resize(cube_.size());
        auto cell = [&](std::size_t a, std::size_t al, std::size_t b) { return (a * g_ + al) * n_ + b; };
        auto file = [&](std::size_t lhs, std::size_t r1, std::size_t r2) {
            checks_[std::max({lhs, r1, r2})].push_back({lhs, r1, r2});
        };
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t al = 0; al < g_; ++al)
                for (std::size_t b = 0; b < n_; ++b)
                    for (std::size_t c = 0; c < n_; ++c) {
                        file(cell(a, al, am_(b, c)), cell(a, al, b), cell(a, al, c)); // left
                        file(cell(am_(a, b), al, c), cell(a, al, c), cell(b, al, c)); // right
                    }
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t al = 0; al < g_; ++al)
                for (std::size_t be = 0; be < g_; ++be)
                    for (std::size_t b = 0; b < n_; ++b)
                        file(cell(a, ag_(al, be), b), cell(a, al, b), cell(a, be, b));
    }

    std::size_t cells() const { return cube_.size(); }

    /// Consistent assignments of the first `depth` cells.
    std::vector<std::vector<std::uint8_t>> prefixes(std::size_t depth)
    {
        std::vector<std::vector<std::uint8_t>> out;
        walk(0, depth, [&] { out.emplace_back(cube_.begin(), cube_.begin() + static_cast<std::ptrdiff_t>(depth)); });
        return out;
    }

    /// Complete cubes extending the prefix.
    std::vector<std::vector<std::uint8_t>> complete(const std::vector<std::uint8_t>& prefix)
    {
        std::fill(cube_.begin(), cube_.end(), kFree);
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            cube_[i] = prefix[i];
            if (!consistent(i))
                return {};
        }
        std::vector<std::vector<std::uint8_t>> out;
        walk(prefix.size(), cube_.size(), [&] { out.push_back(cube_); });
        return out;
    }

private:
    static constexpr std::uint8_t kFree = 0xff;

    struct Check {
        std::size_t lhs, r1, r2;
    };

    std::size_t at(std::size_t a, std::size_t al, std::size_t b) const { return cube_[(a * g_ + al) * n_ + b]; }

    bool consistent(std::size_t placed) const
    {
        for (const auto& c : checks_[placed])
            if (cube_[c.lhs] != am_(cube_[c.r1], cube_[c.r2]))
                return false;
        // (a al b) be c = a al (b be c) once both inner products are known
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t al = 0; al < g_; ++al) {
                for (std::size_t b = 0; b < n_; ++b) {
                    const std::size_t x = at(a, al, b);
                    if (x == kFree)
                        continue;
                    for (std::size_t be = 0; be < g_; ++be)
                        for (std::size_t c = 0; c < n_; ++c) {
                            const std::size_t y = at(b, be, c);
                            if (y == kFree)
                                continue;
                            const std::size_t lhs = at(x, be, c);
                            const std::size_t rhs = at(a, al, y);
                            if (lhs != kFree && rhs != kFree && lhs != rhs)
                                return false;
                        }
                }
            }
        return true;
    }

    template <typename Emit>
    void walk(std::size_t cell, std::size_t stop, Emit&& emit)
    {
        if (cell == stop) {
            emit();
            return;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            cube_[cell] = static_cast<std::uint8_t>(v);
            if (consistent(cell))
                walk(cell + 1, stop, emit);
        }
        cube_[cell] = kFree;
    }

    const SemigroupTable& am_;
    const SemigroupTable& ag_;
    std::size_t n_, g_;
    std::vector<std::uint8_t> cube_;
    std::vector<std::vector<Check>> checks_;
};

RawTables tables_from(const SemigroupTable& add_m, const SemigroupTable& add_g, const std::vector<std::uint8_t>& cube)
{
    RawTables raw;
    const std::size_t n = add_m.order;
    const std::size_t g = add_g.order;
    raw.name = "candidate";
    for (std::size_t i = 0; i < n; ++i)
        raw.m_labels.push_back(std::to_string(i));
    for (std::size_t i = 0; i < g; ++i)
        raw.g_labels.push_back("g" + std::to_string(i));
    raw.add_m.assign(n, std::vector<std::int64_t>(n));
    raw.add_g.assign(g, std::vector<std::int64_t>(g));
    raw.prod.assign(n, std::vector<std::vector<std::int64_t>>(g, std::vector<std::int64_t>(n)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            raw.add_m[a][b] = add_m(a, b);
            for (std::size_t al = 0; al < g; ++al)
                raw.prod[a][al][b] = cube[(a * g + al) * n + b];
        }
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b)
            raw.add_g[a][b] = add_g(a, b);
    return raw;
}

void check_caps(std::size_t n, std::size_t g, std::size_t max_n, std::size_t max_g)
{
    if (n < 1 || g < 1)
        throw Error(ErrorCode::BadBounds, "orders must be at least 1");
    if (n > max_n || g > max_g || n > kSemigroupCap || g > kSemigroupCap)
        throw Error(ErrorCode::CapExceeded, "order (" + std::to_string(n) + "," + std::to_string(g) +
                                                ") is beyond the census caps (" + std::to_string(max_n) + "," +
                                                std::to_string(max_g) + ")");
}

} // namespace

SemigroupTable canonical_semigroup(const SemigroupTable& t)
{
    const std::size_t n = t.order;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    SemigroupTable best = t;
    SemigroupTable cur{n, std::vector<std::uint8_t>(n * n)};
    do {
        // perm maps old index -> new index
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                cur.entries[perm[a] * n + perm[b]] = static_cast<std::uint8_t>(perm[t(a, b)]);
        if (cur.entries < best.entries)
            best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<SemigroupTable> enum_comm_semigroups(std::size_t n, std::size_t cap)
{
    if (n < 1)
        throw Error(ErrorCode::BadBounds, "order must be at least 1");
    if (n > cap || n > kSemigroupCap)
        throw Error(ErrorCode::CapExceeded, "semigroup enumeration is capped at order " +
                                                std::to_string(std::min(cap, kSemigroupCap)));
    std::vector<std::pair<std::size_t, std::size_t>> upper;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            upper.emplace_back(a, b);

    std::map<std::vector<std::uint8_t>, SemigroupTable> classes;
    std::vector<std::size_t> digits(upper.size(), 0);
    SemigroupTable t{n, std::vector<std::uint8_t>(n * n)};
    while (true) {
        for (std::size_t i = 0; i < upper.size(); ++i) {
            const auto [a, b] = upper[i];
            t.entries[a * n + b] = t.entries[b * n + a] = static_cast<std::uint8_t>(digits[i]);
        }
        if (associative(t)) {
            auto canon = canonical_semigroup(t);
            classes.emplace(canon.entries, canon);
        }
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == n)
            digits[i++] = 0;
        if (i == digits.size())
            break;
    }
    std::vector<SemigroupTable> out;
    for (auto& [key, table] : classes)
        out.push_back(std::move(table));
    return out;
}

std::vector<GammaSemiring> enum_gamma_semirings(std::size_t n, std::size_t g, std::size_t workers,
                                                std::size_t max_n, std::size_t max_g)
{
    check_caps(n, g, max_n, max_g);
    const auto ms = enum_comm_semigroups(n);
    const auto gs = enum_comm_semigroups(g);

    struct Task {
        std::size_t mi, gi;
        std::vector<std::uint8_t> prefix;
    };
    std::vector<Task> tasks;
    for (std::size_t mi = 0; mi < ms.size(); ++mi)
        for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            CubeSearch search(ms[mi], gs[gi]);
            const std::size_t depth = std::min<std::size_t>(3, search.cells());
            for (auto& p : search.prefixes(depth))
                tasks.push_back({mi, gi, std::move(p)});
        }

    using Found = std::vector<std::pair<std::vector<std::uint8_t>, RawTables>>;
    auto found = parallel_map(tasks.size(), workers, [&](std::size_t i) {
        const Task& task = tasks[i];
        CubeSearch search(ms[task.mi], gs[task.gi]);
        Found local;
        for (const auto& cube : search.complete(task.prefix)) {
            const GammaSemiring candidate = seal(tables_from(ms[task.mi], gs[task.gi], cube));
            auto form = canonical_form(candidate);
            local.emplace_back(std::move(form.key), transport(candidate, form.relabeling));
        }
        return local;
    });

    std::map<std::vector<std::uint8_t>, RawTables> classes;
    for (auto& local : found)
        for (auto& [key, raw] : local)
            classes.emplace(std::move(key), std::move(raw));

    std::vector<GammaSemiring> out;
    std::size_t index = 0;
    for (auto& [key, raw] : classes) {
        for (std::size_t i = 0; i < raw.m_labels.size(); ++i)
            raw.m_labels[i] = std::to_string(i);
        for (std::size_t i = 0; i < raw.g_labels.size(); ++i)
            raw.g_labels[i] = "g" + std::to_string(i);
        raw.name = "census-n" + std::to_string(n) + "-g" + std::to_string(g) + "-" + std::to_string(index++);
        out.push_back(seal(raw));
    }
    return out;
}

Census census_report(std::size_t max_n, std::size_t max_g, std::size_t workers, std::size_t cap_n, std::size_t cap_g)
{
    check_caps(max_n, max_g, cap_n, cap_g);
    Census census;
    census.max_n = max_n;
    census.max_g = max_g;
    Budget budget;
    budget.workers = 1;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (std::size_t g = 1; g <= max_g; ++g) {
            auto instances = enum_gamma_semirings(n, g, workers, cap_n, cap_g);
            auto records = parallel_map(instances.size(), workers, [&](std::size_t i) {
                const GammaSemiring& m = instances[i];
                CensusRecord rec{m, n, g, {}, false, {}};
                for (std::size_t k = 0; k < kAllKinds.size(); ++k)
                    rec.kind_counts[k] = kernel::enumerate_ideals(m, kAllKinds[k]).size();
                rec.gb_simple = is_gb_simple(m).verdict;
                rec.reports = verify_many(m, statement_ids(), budget);
                return rec;
            });
            for (auto& r : records)
                census.records.push_back(std::move(r));
        }
    return census;
}

std::string census_file_name(const CensusRecord& rec)
{
    return rec.instance.name() + ".json";
}

std::string census_summary_json(const Census& census)
{
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["max_n"] = census.max_n;
    doc["max_g"] = census.max_g;
    doc["total_classes"] = census.records.size();

    ordered_json by_order = ordered_json::array();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
    for (const auto& r : census.records)
        ++counts[{r.n, r.g}];
    for (const auto& [order, count] : counts)
        by_order.push_back({{"n", order.first}, {"g", order.second}, {"classes", count}});
    doc["classes_by_order"] = std::move(by_order);

    ordered_json simple = ordered_json::array();
    for (const auto& r : census.records)
        if (r.gb_simple)
            simple.push_back(r.instance.name());
    doc["gb_simple"] = std::move(simple);

    ordered_json totals = ordered_json::array();
    for (auto id : statement_ids()) {
        std::size_t failing = 0;
        std::size_t exhausted = 0;
        std::uint64_t counterexamples = 0;
        ordered_json failures = ordered_json::array();
        for (const auto& r : census.records)
            for (const auto& rep : r.reports)
                if (rep.statement_id == id) {
                    counterexamples += rep.counterexamples;
                    exhausted += rep.verdict == Verdict::BudgetExhausted;
                    if (rep.verdict == Verdict::Fail) {
                        ++failing;
                        failures.push_back({{"instance", r.instance.name()},
                                            {"counterexamples", rep.counterexamples},
                                            {"first_witness", witness_json(r.instance, rep.witnesses.front())}});
                    }
                }
        ordered_json entry;
        entry["id"] = std::string(id);
        entry["failing_classes"] = failing;
        entry["budget_exhausted_classes"] = exhausted;
        entry["counterexamples"] = counterexamples;
        entry["failures"] = std::move(failures);
        totals.push_back(std::move(entry));
    }
    doc["statements"] = std::move(totals);

    ordered_json records = ordered_json::array();
    for (const auto& r : census.records) {
        ordered_json rec;
        rec["instance"] = r.instance.name();
        rec["file"] = census_file_name(r);
        rec["n"] = r.n;
        rec["g"] = r.g;
        ordered_json kinds;
        for (std::size_t k = 0; k < kAllKinds.size(); ++k)
            kinds[std::string(kind_name(kAllKinds[k]))] = r.kind_counts[k];
        rec["kind_counts"] = std::move(kinds);
        rec["gb_simple"] = r.gb_simple;
        ordered_json verdicts;
        for (const auto& rep : r.reports)
            verdicts[rep.statement_id] = std::string(verdict_name(rep.verdict));
        rec["verdicts"] = std::move(verdicts);
        records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

void write_census(const Census& census, const std::string& directory)
{
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec)
        throw Error(ErrorCode::IoError, "cannot create '" + directory + "': " + ec.message());
    const std::filesystem::path dir(directory);
    for (const auto& r : census.records)
        write_file((dir / census_file_name(r)).string(), to_json(r.instance));
    write_file((dir / "summary.json").string(), census_summary_json(census));
}

} // namespace gsr
