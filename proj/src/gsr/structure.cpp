#include "gsr/structure.hpp"

#include "gsr/setalg.hpp"

namespace gsr {

namespace kernel {

std::vector<Mask> enumerate_ideals(const GammaSemiring& m, IdealKind kind, std::size_t cap)
{
    const std::size_t n = m.size();
    if (n > cap || n > 30)
        throw Error(ErrorCode::CapExceeded, "ideal enumeration is capped at " + std::to_string(cap) +
                                                " elements, instance has " + std::to_string(n));
    std::vector<Mask> out;
    const Mask end = Mask{1} << n;
    for (Mask s = 1; s < end; ++s)
        if (has_kind(m, s, kind))
            out.push_back(s);
    return out;
}

} // namespace kernel

std::vector<ElementSet> enumerate_ideals(const GammaSemiring& m, IdealKind kind, std::size_t cap)
{
    std::vector<ElementSet> out;
    for (Mask s : kernel::enumerate_ideals(m, kind, cap))
        out.emplace_back(m, s);
    return out;
}

GbSimpleRecord is_gb_simple(const GammaSemiring& m, std::size_t cap)
{
    const std::size_t n = m.size();
    const Mask all = m.carrier();
    GbSimpleRecord rec;

    rec.sandwich_is_whole = true;
    rec.generated_is_whole = true;
    for (std::size_t a = 0; a < n; ++a) {
        const Mask s = kernel::sandwich(m, bit(a), all, bit(a));
        if (s != all && rec.sandwich_is_whole) {
            rec.sandwich_is_whole = false;
            rec.witness_element = a;
            rec.witness_sandwich = s;
        }
        if (kernel::generated_gen_bi(m, bit(a)) != all)
            rec.generated_is_whole = false;
    }

    if (n <= cap && n <= 30) {
        rec.only_whole_carrier = true;
        for (Mask s = 1; s < all; ++s)
            if (kernel::has_kind(m, s, IdealKind::GenBi)) {
                rec.only_whole_carrier = false;
                rec.proper_ideal = s;
                break;
            }
    }

    rec.verdict = rec.sandwich_is_whole;
    if (rec.generated_is_whole != rec.verdict || (rec.only_whole_carrier && *rec.only_whole_carrier != rec.verdict))
        throw Error(ErrorCode::EquivalenceBroken,
                    "GB-simplicity conditions disagree on '" + m.name() + "': only-M=" +
                        (rec.only_whole_carrier ? (*rec.only_whole_carrier ? "yes" : "no") : "skipped") +
                        ", aGMGa=M " + (rec.sandwich_is_whole ? "yes" : "no") + ", (a)=M " +
                        (rec.generated_is_whole ? "yes" : "no"));
    return rec;
}

MinimalityCheck is_minimal(const GammaSemiring& m, const ElementSet& s, IdealKind kind, std::size_t cap)
{
    require_owner(m, s);
    if (s.empty())
        throw Error(ErrorCode::EmptyOperand, "operand set is empty");
    if (s.size() > cap || s.size() > 30)
        throw Error(ErrorCode::CapExceeded, "minimality scan is capped at " + std::to_string(cap) + " elements");
    if (!kernel::has_kind(m, s.mask(), kind))
        throw Error(ErrorCode::KindNotSatisfied, "set is not of kind " + std::string(kind_name(kind)));

    // increasing submasks: sub = (sub - S) & S walks them in mask order
    const Mask whole = s.mask();
    for (Mask sub = (0 - whole) & whole; sub != whole; sub = (sub - whole) & whole)
        if (kernel::has_kind(m, sub, kind))
            return {false, ElementSet{m, sub}};
    return {};
}

} // namespace gsr
