#include "gsr/report.hpp"

#include "gsr/render.hpp"

namespace gsr {

using nlohmann::ordered_json;

namespace {

std::string binding_text(const GammaSemiring& m, const Slot& slot, Mask value)
{
    return slot.type == SlotType::Element ? m.m_labels()[value] : format_set(m, value);
}

} // namespace

ordered_json witness_bindings(const GammaSemiring& m, const Witness& w)
{
    ordered_json out = ordered_json::object();
    const auto& slots = statement_slots(w.statement);
    for (std::size_t i = 0; i < slots.size(); ++i)
        out[std::string(slots[i].name)] = binding_text(m, slots[i], w.values[i]);
    return out;
}

ordered_json witness_json(const GammaSemiring& m, const Witness& w)
{
    ordered_json out;
    out["bindings"] = witness_bindings(m, w);
    out["detail"] = w.detail;
    return out;
}

ordered_json report_json(const GammaSemiring& m, const VerificationReport& r)
{
    ordered_json out;
    out["id"] = r.statement_id;
    out["verdict"] = std::string(verdict_name(r.verdict));
    out["counterexamples"] = r.counterexamples;
    out["evaluations"] = r.evaluations;
    out["universe"] = r.universe_size;
    out["truncated"] = r.truncated;
    ordered_json ws = ordered_json::array();
    for (const auto& w : r.witnesses)
        ws.push_back(witness_json(m, w));
    out["witnesses"] = std::move(ws);
    return out;
}

ordered_json verification_json(const GammaSemiring& m, const std::vector<VerificationReport>& reports)
{
    ordered_json out;
    out["instance"] = m.name();
    ordered_json list = ordered_json::array();
    for (const auto& r : reports)
        list.push_back(report_json(m, r));
    out["statements"] = std::move(list);
    return out;
}

std::string format_bindings(const GammaSemiring& m, const Witness& w)
{
    std::string out;
    const auto& slots = statement_slots(w.statement);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i)
            out += ' ';
        out += std::string(slots[i].name) + "=" + binding_text(m, slots[i], w.values[i]);
    }
    return out;
}

std::string report_line(const GammaSemiring& m, const VerificationReport& r)
{
    std::string line = r.statement_id;
    line.resize(std::max<std::size_t>(line.size(), 14), ' ');
    line += ' ';
    std::string verdict(verdict_name(r.verdict));
    verdict.resize(16, ' ');
    line += verdict + " counterexamples=" + std::to_string(r.counterexamples);
    if (!r.witnesses.empty()) {
        const auto& w = r.witnesses.front();
        const auto bindings = format_bindings(m, w);
        line += "  first: " + (bindings.empty() ? std::string("(instance)") : bindings) + " (" + w.detail + ")";
    }
    return line;
}

} // namespace gsr
