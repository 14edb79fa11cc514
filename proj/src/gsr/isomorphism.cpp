#include "gsr/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace gsr {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

std::vector<std::size_t> invert_map(const std::vector<std::size_t>& map)
{
    std::vector<std::size_t> inv(map.size(), kUnset);
    for (std::size_t i = 0; i < map.size(); ++i)
        inv[map[i]] = i;
    return inv;
}

bool is_permutation_of(const std::vector<std::size_t>& map, std::size_t size)
{
    if (map.size() != size)
        return false;
    std::vector<bool> seen(size, false);
    for (std::size_t v : map) {
        if (v >= size || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

// Relabeling-invariant counts per element. Equal profiles are necessary for
// two elements to correspond.
using Profile = std::vector<std::size_t>;

std::vector<Profile> m_profiles(const GammaSemiring& m)
{
    const std::size_t n = m.size();
    const std::size_t g = m.gamma_size();
    std::vector<Profile> out(n, Profile(6, 0));
    for (std::size_t a = 0; a < n; ++a) {
        out[a][0] = m.add(a, a) == a;
        for (std::size_t b = 0; b < n; ++b) {
            out[a][1] += m.add(a, b) == a;
            out[m.add(a, b)][2] += 1;
            for (std::size_t al = 0; al < g; ++al) {
                out[m.mul(a, al, b)][3] += 1;
                out[a][4] += m.mul(a, al, b) == a;
                out[b][5] += m.mul(a, al, b) == b;
            }
        }
    }
    return out;
}

std::vector<Profile> g_profiles(const GammaSemiring& m)
{
    const std::size_t n = m.size();
    const std::size_t g = m.gamma_size();
    std::vector<Profile> out(g, Profile(4, 0));
    for (std::size_t al = 0; al < g; ++al) {
        out[al][0] = m.gadd(al, al) == al;
        for (std::size_t be = 0; be < g; ++be) {
            out[al][1] += m.gadd(al, be) == al;
            out[m.gadd(al, be)][2] += 1;
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                out[al][3] += m.mul(a, al, b) == a;
    }
    return out;
}

class IsoSearch {
public:
    IsoSearch(const GammaSemiring& lhs, const GammaSemiring& rhs)
        : l_(lhs), r_(rhs), lp_(m_profiles(lhs)), rp_(m_profiles(rhs)), lgp_(g_profiles(lhs)),
          rgp_(g_profiles(rhs)), phi_(lhs.size(), kUnset), phi_inv_(rhs.size(), kUnset)
    {
    }

    std::optional<Isomorphism> run()
    {
        if (l_.size() != r_.size() || l_.gamma_size() != r_.gamma_size())
            return std::nullopt;
        auto sorted = [](std::vector<Profile> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        if (sorted(lp_) != sorted(rp_) || sorted(lgp_) != sorted(rgp_))
            return std::nullopt;
        if (assign_phi(0))
            return result_;
        return std::nullopt;
    }

private:
    bool phi_consistent(std::size_t a) const
    {
        for (std::size_t b = 0; b <= a; ++b) {
            const std::size_t s = l_.add(a, b);
            const std::size_t image = r_.add(phi_[a], phi_[b]);
            if (phi_[s] != kUnset && phi_[s] != image)
                return false;
            if (phi_inv_[image] != kUnset && phi_inv_[image] != s)
                return false;
        }
        return true;
    }

    bool assign_phi(std::size_t a)
    {
        if (a == l_.size())
            return find_psi();
        for (std::size_t x = 0; x < r_.size(); ++x) {
            if (phi_inv_[x] != kUnset || lp_[a] != rp_[x])
                continue;
            phi_[a] = x;
            phi_inv_[x] = a;
            if (phi_consistent(a) && assign_phi(a + 1))
                return true;
            phi_[a] = kUnset;
            phi_inv_[x] = kUnset;
        }
        return false;
    }

    bool find_psi()
    {
        const std::size_t n = l_.size();
        const std::size_t g = l_.gamma_size();
        candidates_.assign(g, {});
        for (std::size_t al = 0; al < g; ++al)
            for (std::size_t be = 0; be < g; ++be) {
                if (lgp_[al] != rgp_[be])
                    continue;
                bool ok = true;
                for (std::size_t a = 0; a < n && ok; ++a)
                    for (std::size_t b = 0; b < n && ok; ++b)
                        ok = phi_[l_.mul(a, al, b)] == r_.mul(phi_[a], be, phi_[b]);
                if (ok)
                    candidates_[al].push_back(be);
            }
        psi_.assign(g, kUnset);
        psi_inv_.assign(g, kUnset);
        return assign_psi(0);
    }

    bool assign_psi(std::size_t al)
    {
        if (al == l_.gamma_size()) {
            result_ = Isomorphism{phi_, psi_};
            return true;
        }
        for (std::size_t be : candidates_[al]) {
            if (psi_inv_[be] != kUnset)
                continue;
            psi_[al] = be;
            psi_inv_[be] = al;
            bool ok = true;
            for (std::size_t x = 0; x <= al && ok; ++x) {
                const std::size_t s = l_.gadd(al, x);
                const std::size_t image = r_.gadd(psi_[al], psi_[x]);
                ok = (psi_[s] == kUnset || psi_[s] == image) && (psi_inv_[image] == kUnset || psi_inv_[image] == s);
            }
            if (ok && assign_psi(al + 1))
                return true;
            psi_[al] = kUnset;
            psi_inv_[be] = kUnset;
        }
        return false;
    }

    const GammaSemiring& l_;
    const GammaSemiring& r_;
    std::vector<Profile> lp_, rp_, lgp_, rgp_;
    std::vector<std::size_t> phi_, phi_inv_, psi_, psi_inv_;
    std::vector<std::vector<std::size_t>> candidates_;
    Isomorphism result_;
};

std::vector<std::uint8_t> relabeled_key(const GammaSemiring& m, const std::vector<std::size_t>& phi_inv,
                                        const std::vector<std::size_t>& psi_inv,
                                        const std::vector<std::size_t>& phi, const std::vector<std::size_t>& psi)
{
    const std::size_t n = m.size();
    const std::size_t g = m.gamma_size();
    std::vector<std::uint8_t> key;
    key.reserve(n * n + g * g + n * g * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            key.push_back(static_cast<std::uint8_t>(phi[m.add(phi_inv[i], phi_inv[j])]));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            key.push_back(static_cast<std::uint8_t>(psi[m.gadd(psi_inv[i], psi_inv[j])]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t al = 0; al < g; ++al)
            for (std::size_t j = 0; j < n; ++j)
                key.push_back(static_cast<std::uint8_t>(phi[m.mul(phi_inv[i], psi_inv[al], phi_inv[j])]));
    return key;
}

} // namespace

Isomorphism identity_isomorphism(const GammaSemiring& m)
{
    Isomorphism iso;
    iso.phi.resize(m.size());
    iso.psi.resize(m.gamma_size());
    std::iota(iso.phi.begin(), iso.phi.end(), std::size_t{0});
    std::iota(iso.psi.begin(), iso.psi.end(), std::size_t{0});
    return iso;
}

Isomorphism inverse(const Isomorphism& iso)
{
    return {invert_map(iso.phi), invert_map(iso.psi)};
}

Isomorphism compose(const Isomorphism& first, const Isomorphism& second)
{
    Isomorphism out;
    for (std::size_t v : first.phi)
        out.phi.push_back(second.phi[v]);
    for (std::size_t v : first.psi)
        out.psi.push_back(second.psi[v]);
    return out;
}

bool is_isomorphism(const GammaSemiring& from, const GammaSemiring& to, const Isomorphism& iso)
{
    if (from.size() != to.size() || from.gamma_size() != to.gamma_size())
        return false;
    if (!is_permutation_of(iso.phi, from.size()) || !is_permutation_of(iso.psi, from.gamma_size()))
        return false;
    const auto& phi = iso.phi;
    const auto& psi = iso.psi;
    for (std::size_t a = 0; a < from.size(); ++a)
        for (std::size_t b = 0; b < from.size(); ++b) {
            if (phi[from.add(a, b)] != to.add(phi[a], phi[b]))
                return false;
            for (std::size_t al = 0; al < from.gamma_size(); ++al)
                if (phi[from.mul(a, al, b)] != to.mul(phi[a], psi[al], phi[b]))
                    return false;
        }
    for (std::size_t al = 0; al < from.gamma_size(); ++al)
        for (std::size_t be = 0; be < from.gamma_size(); ++be)
            if (psi[from.gadd(al, be)] != to.gadd(psi[al], psi[be]))
                return false;
    return true;
}

RawTables transport(const GammaSemiring& m, const Isomorphism& iso)
{
    if (!is_permutation_of(iso.phi, m.size()) || !is_permutation_of(iso.psi, m.gamma_size()))
        throw Error(ErrorCode::MalformedTable, "relabeling is not a pair of permutations");
    const auto phi_inv = invert_map(iso.phi);
    const auto psi_inv = invert_map(iso.psi);
    const std::size_t n = m.size();
    const std::size_t g = m.gamma_size();
    RawTables raw;
    raw.name = m.name();
    for (std::size_t i = 0; i < n; ++i)
        raw.m_labels.push_back(m.m_labels()[phi_inv[i]]);
    for (std::size_t i = 0; i < g; ++i)
        raw.g_labels.push_back(m.g_labels()[psi_inv[i]]);
    raw.add_m.assign(n, std::vector<std::int64_t>(n));
    raw.add_g.assign(g, std::vector<std::int64_t>(g));
    raw.prod.assign(n, std::vector<std::vector<std::int64_t>>(g, std::vector<std::int64_t>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            raw.add_m[i][j] = static_cast<std::int64_t>(iso.phi[m.add(phi_inv[i], phi_inv[j])]);
            for (std::size_t al = 0; al < g; ++al)
                raw.prod[i][al][j] =
                    static_cast<std::int64_t>(iso.phi[m.mul(phi_inv[i], psi_inv[al], phi_inv[j])]);
        }
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            raw.add_g[i][j] = static_cast<std::int64_t>(iso.psi[m.gadd(psi_inv[i], psi_inv[j])]);
    return raw;
}

std::optional<Isomorphism> are_isomorphic(const GammaSemiring& lhs, const GammaSemiring& rhs)
{
    return IsoSearch(lhs, rhs).run();
}

CanonicalForm canonical_form(const GammaSemiring& m)
{
    const std::size_t n = m.size();
    const std::size_t g = m.gamma_size();
    if (n > kCanonicalMaxOrder || g > kCanonicalMaxOrder)
        throw Error(ErrorCode::CapExceeded, "canonical form is limited to carriers of at most " +
                                                std::to_string(kCanonicalMaxOrder) + " elements");
    std::vector<std::size_t> phi_inv(n);
    std::iota(phi_inv.begin(), phi_inv.end(), std::size_t{0});
    CanonicalForm best;
    bool have = false;
    do {
        const auto phi = invert_map(phi_inv);
        std::vector<std::size_t> psi_inv(g);
        std::iota(psi_inv.begin(), psi_inv.end(), std::size_t{0});
        do {
            const auto psi = invert_map(psi_inv);
            auto key = relabeled_key(m, phi_inv, psi_inv, phi, psi);
            if (!have || key < best.key) {
                best.key = std::move(key);
                best.relabeling = Isomorphism{phi, psi};
                have = true;
            }
        } while (std::next_permutation(psi_inv.begin(), psi_inv.end()));
    } while (std::next_permutation(phi_inv.begin(), phi_inv.end()));
    return best;
}

GammaSemiring canonical_instance(const GammaSemiring& m, std::string name)
{
    RawTables raw = transport(m, canonical_form(m).relabeling);
    raw.name = std::move(name);
    for (std::size_t i = 0; i < raw.m_labels.size(); ++i)
        raw.m_labels[i] = std::to_string(i);
    for (std::size_t i = 0; i < raw.g_labels.size(); ++i)
        raw.g_labels[i] = "g" + std::to_string(i);
    return seal(raw);
}

} // namespace gsr
