#include "gsr/setalg.hpp"

#include <vector>

namespace gsr {

namespace kernel {

Mask sum(const GammaSemiring& m, Mask a, Mask b)
{
    Mask out = 0;
    for_each_bit(a, [&](std::size_t x) { for_each_bit(b, [&](std::size_t y) { out |= bit(m.add(x, y)); }); });
    return out;
}

Mask closure(const GammaSemiring& m, Mask s)
{
    Mask closed = s;
    Mask frontier = s;
    while (frontier != 0) {
        const std::size_t x = lowest(frontier);
        frontier &= frontier - 1;
        for_each_bit(closed, [&](std::size_t y) {
            const Mask z = bit(m.add(x, y));
            if ((closed & z) == 0) {
                closed |= z;
                frontier |= z;
            }
        });
        // x + z for z added above is covered when z leaves the frontier
    }
    return closed;
}

bool sum_closed(const GammaSemiring& m, Mask s)
{
    bool ok = true;
    for_each_bit(s, [&](std::size_t x) {
        if (ok)
            for_each_bit(s, [&](std::size_t y) { ok = ok && contains(s, m.add(x, y)); });
    });
    return ok;
}

Mask elementary(const GammaSemiring& m, Mask a, Mask lambda, Mask b)
{
    if (lambda == m.gamma_carrier())
        return elementary(m, a, b);
    Mask out = 0;
    for_each_bit(a, [&](std::size_t x) {
        for_each_bit(lambda, [&](std::size_t l) {
            for_each_bit(b, [&](std::size_t y) { out |= bit(m.mul(x, l, y)); });
        });
    });
    return out;
}

Mask elementary(const GammaSemiring& m, Mask a, Mask b)
{
    Mask out = 0;
    for_each_bit(a, [&](std::size_t x) { for_each_bit(b, [&](std::size_t y) { out |= m.pair_products(x, y); }); });
    return out;
}

Mask product(const GammaSemiring& m, Mask a, Mask lambda, Mask b)
{
    return closure(m, elementary(m, a, lambda, b));
}

Mask product(const GammaSemiring& m, Mask a, Mask b)
{
    return closure(m, elementary(m, a, b));
}

Mask chain_words(const GammaSemiring& m, std::span<const Mask> sets)
{
    if (sets.size() == 3 && sets[1] == m.carrier())
        return sandwich_words(m, sets[0], sets[1], sets[2]);
    Mask words = sets.empty() ? 0 : sets[0];
    for (std::size_t i = 1; i < sets.size(); ++i)
        words = elementary(m, words, sets[i]);
    return words;
}

Mask sandwich_words(const GammaSemiring& m, Mask a, Mask mid, Mask c)
{
    if (mid == m.carrier()) {
        Mask out = 0;
        for_each_bit(a, [&](std::size_t x) { for_each_bit(c, [&](std::size_t y) { out |= m.sandwich_words(x, y); }); });
        return out;
    }
    return elementary(m, elementary(m, a, mid), c);
}

Mask sandwich(const GammaSemiring& m, Mask a, Mask mid, Mask c)
{
    return closure(m, sandwich_words(m, a, mid, c));
}

} // namespace kernel

namespace {

void require_operand(const GammaSemiring& m, const ElementSet& s, Carrier carrier = Carrier::M)
{
    require_owner(m, s);
    if (s.carrier() != carrier)
        throw Error(ErrorCode::MalformedTable,
                    carrier == Carrier::M ? "expected a subset of M" : "expected a subset of Gamma");
    if (s.empty())
        throw Error(ErrorCode::EmptyOperand, "operand set is empty");
}

} // namespace

ElementSet add_pointwise(const GammaSemiring& m, const ElementSet& a, const ElementSet& b)
{
    require_operand(m, a);
    require_operand(m, b);
    return {m, kernel::sum(m, a.mask(), b.mask())};
}

ElementSet additive_closure(const GammaSemiring& m, const ElementSet& s)
{
    require_operand(m, s);
    return {m, kernel::closure(m, s.mask())};
}

ElementSet gamma_product(const GammaSemiring& m, const ElementSet& a, const ElementSet& lambda, const ElementSet& b)
{
    require_operand(m, a);
    require_operand(m, lambda, Carrier::Gamma);
    require_operand(m, b);
    return {m, kernel::product(m, a.mask(), lambda.mask(), b.mask())};
}

ElementSet gamma_product(const GammaSemiring& m, const ElementSet& a, const ElementSet& b)
{
    return gamma_product(m, a, ElementSet::gamma(m), b);
}

ElementSet chain_product(const GammaSemiring& m, std::span<const ElementSet> sets)
{
    if (sets.size() < 2)
        throw Error(ErrorCode::LengthTooShort, "a chain product needs at least two sets");
    std::vector<Mask> masks;
    for (const auto& s : sets) {
        require_operand(m, s);
        masks.push_back(s.mask());
    }
    return {m, kernel::closure(m, kernel::chain_words(m, masks))};
}

} // namespace gsr
