#include "gsr/builders.hpp"

#include <algorithm>
#include <set>

namespace gsr {

namespace {

RawTables empty_tables(std::string name, std::vector<std::string> m_labels, std::vector<std::string> g_labels)
{
    RawTables raw;
    raw.name = std::move(name);
    raw.m_labels = std::move(m_labels);
    raw.g_labels = std::move(g_labels);
    const std::size_t n = raw.m_labels.size();
    const std::size_t g = raw.g_labels.size();
    raw.add_m.assign(n, std::vector<std::int64_t>(n));
    raw.add_g.assign(g, std::vector<std::int64_t>(g));
    raw.prod.assign(n, std::vector<std::vector<std::int64_t>>(g, std::vector<std::int64_t>(n)));
    return raw;
}

bool is_prime(std::size_t p)
{
    if (p < 2)
        return false;
    for (std::size_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

using Matrix = std::vector<std::size_t>;

Matrix decode(std::size_t index, std::size_t p, std::size_t entries)
{
    Matrix out(entries);
    for (std::size_t i = entries; i-- > 0;) {
        out[i] = index % p;
        index /= p;
    }
    return out;
}

std::size_t encode(const Matrix& m, std::size_t p)
{
    std::size_t index = 0;
    for (std::size_t v : m)
        index = index * p + v;
    return index;
}

std::string matrix_label(const Matrix& m, std::size_t rows, std::size_t cols, std::size_t p)
{
    std::string out;
    for (std::size_t r = 0; r < rows; ++r) {
        if (r)
            out += '/';
        for (std::size_t c = 0; c < cols; ++c) {
            if (c && p > 10)
                out += '.';
            out += std::to_string(m[r * cols + c]);
        }
    }
    return out;
}

Matrix multiply(const Matrix& x, const Matrix& y, std::size_t rows, std::size_t inner, std::size_t cols,
                std::size_t p)
{
    Matrix out(rows * cols, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::size_t acc = 0;
            for (std::size_t k = 0; k < inner; ++k)
                acc += x[i * inner + k] * y[k * cols + j];
            out[i * cols + j] = acc % p;
        }
    return out;
}

} // namespace

GammaSemiring build_minmax(std::size_t k, std::size_t g)
{
    if (k < 1 || g < 1 || g > k || k > kMaxCarrier)
        throw Error(ErrorCode::BadBounds, "minmax needs 1 <= g <= k <= 64, got k=" + std::to_string(k) +
                                              ", g=" + std::to_string(g));
    std::vector<std::string> m_labels;
    std::vector<std::string> g_labels;
    for (std::size_t i = 1; i <= k; ++i)
        m_labels.push_back(std::to_string(i));
    for (std::size_t i = 1; i <= g; ++i)
        g_labels.push_back(std::to_string(i));
    RawTables raw = empty_tables("minmax(" + std::to_string(k) + "," + std::to_string(g) + ")",
                                 std::move(m_labels), std::move(g_labels));
    // index i carries the value i+1
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            raw.add_m[a][b] = static_cast<std::int64_t>(std::max(a, b));
            for (std::size_t al = 0; al < g; ++al)
                raw.prod[a][al][b] = static_cast<std::int64_t>(std::min({a, al, b}));
        }
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b)
            raw.add_g[a][b] = static_cast<std::int64_t>(std::max(a, b));
    return seal(raw);
}

GammaSemiring build_zmod(std::size_t n, const std::vector<std::size_t>& gamma_residues)
{
    if (n < 1 || n > kMaxCarrier)
        throw Error(ErrorCode::BadBounds, "zmod needs 1 <= n <= 64, got n=" + std::to_string(n));
    if (gamma_residues.empty())
        throw Error(ErrorCode::BadBounds, "zmod needs a nonempty Gamma");
    std::set<std::size_t> gamma;
    for (std::size_t r : gamma_residues) {
        if (r >= n)
            throw Error(ErrorCode::BadBounds,
                        "residue " + std::to_string(r) + " is not reduced mod " + std::to_string(n));
        gamma.insert(r);
    }
    std::string offending;
    for (auto a = gamma.begin(); a != gamma.end(); ++a)
        for (auto b = a; b != gamma.end(); ++b)
            if (!gamma.contains((*a + *b) % n))
                offending += " (" + std::to_string(*a) + "," + std::to_string(*b) + "): " + std::to_string(*a) +
                             "+" + std::to_string(*b) + "=" + std::to_string((*a + *b) % n);
    if (!offending.empty())
        throw Error(ErrorCode::GammaNotClosed, "Gamma is not closed under + mod " + std::to_string(n) + ":" + offending);

    const std::vector<std::size_t> residues(gamma.begin(), gamma.end());
    std::vector<std::size_t> position(n, 0);
    for (std::size_t i = 0; i < residues.size(); ++i)
        position[residues[i]] = i;

    std::vector<std::string> m_labels;
    std::vector<std::string> g_labels;
    std::string gamma_text;
    for (std::size_t i = 0; i < n; ++i)
        m_labels.push_back(std::to_string(i));
    for (std::size_t r : residues) {
        g_labels.push_back(std::to_string(r));
        gamma_text += (gamma_text.empty() ? "" : ",") + std::to_string(r);
    }
    RawTables raw = empty_tables("zmod(" + std::to_string(n) + ",{" + gamma_text + "})", std::move(m_labels),
                                 std::move(g_labels));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            raw.add_m[a][b] = static_cast<std::int64_t>((a + b) % n);
            for (std::size_t al = 0; al < residues.size(); ++al)
                raw.prod[a][al][b] = static_cast<std::int64_t>((a * residues[al] % n) * b % n);
        }
    for (std::size_t a = 0; a < residues.size(); ++a)
        for (std::size_t b = 0; b < residues.size(); ++b)
            raw.add_g[a][b] = static_cast<std::int64_t>(position[(residues[a] + residues[b]) % n]);
    return seal(raw);
}

GammaSemiring build_matrix(std::size_t p, std::size_t rows, std::size_t cols, std::size_t cap)
{
    if (!is_prime(p) || rows < 1 || cols < 1)
        throw Error(ErrorCode::BadBounds, "matrix needs a prime p and rows, cols >= 1");
    const std::size_t entries = rows * cols;
    const std::size_t limit = std::min(cap, kMaxCarrier);
    std::size_t count = 1;
    for (std::size_t i = 0; i < entries; ++i) {
        count *= p;
        if (count > limit)
            throw Error(ErrorCode::CapExceeded, "p^(rows*cols) exceeds the carrier cap of " + std::to_string(limit));
    }

    std::vector<Matrix> ms;
    std::vector<Matrix> gs;
    std::vector<std::string> m_labels;
    std::vector<std::string> g_labels;
    for (std::size_t i = 0; i < count; ++i) {
        ms.push_back(decode(i, p, entries));
        gs.push_back(decode(i, p, entries));
        m_labels.push_back(matrix_label(ms.back(), rows, cols, p));
        g_labels.push_back(matrix_label(gs.back(), cols, rows, p));
    }
    RawTables raw = empty_tables("matrix(" + std::to_string(p) + "," + std::to_string(rows) + "," +
                                     std::to_string(cols) + ")",
                                 std::move(m_labels), std::move(g_labels));
    auto add = [&](const Matrix& x, const Matrix& y) {
        Matrix s(entries);
        for (std::size_t i = 0; i < entries; ++i)
            s[i] = (x[i] + y[i]) % p;
        return encode(s, p);
    };
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b) {
            raw.add_m[a][b] = static_cast<std::int64_t>(add(ms[a], ms[b]));
            raw.add_g[a][b] = static_cast<std::int64_t>(add(gs[a], gs[b]));
        }
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t al = 0; al < count; ++al) {
            const Matrix left = multiply(ms[a], gs[al], rows, cols, rows, p);
            for (std::size_t b = 0; b < count; ++b)
                raw.prod[a][al][b] = static_cast<std::int64_t>(encode(multiply(left, ms[b], rows, rows, cols, p), p));
        }
    return seal(raw, limit);
}

} // namespace gsr
