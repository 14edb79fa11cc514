#include "gsr/render.hpp"

namespace gsr {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace

std::string format_set(const GammaSemiring& m, Mask s, Carrier carrier)
{
    const auto& labels = carrier == Carrier::M ? m.m_labels() : m.g_labels();
    std::string out = "{";
    bool first = true;
    for_each_bit(s, [&](std::size_t i) {
        if (!first)
            out += ',';
        out += labels[i];
        first = false;
    });
    return out + "}";
}

Mask parse_set(const GammaSemiring& m, std::string_view text, Carrier carrier)
{
    text = trim(text);
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}')
        text = trim(text.substr(1, text.size() - 2));
    Mask out = 0;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto label = trim(text.substr(0, comma));
        const auto index = carrier == Carrier::M ? m.find_label(label) : m.find_gamma_label(label);
        if (!index)
            throw Error(ErrorCode::MalformedTable, "unknown element label '" + std::string(label) + "'");
        out |= bit(*index);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::string format_term(const GammaSemiring& m, const Term& term)
{
    std::string out;
    for (std::size_t i = 0; i < term.size(); ++i) {
        if (i)
            out += '*';
        out += (i % 2 == 0) ? m.m_labels()[term[i]] : m.g_labels()[term[i]];
    }
    return out;
}

std::string describe(const GammaSemiring& m, const KindWitness& w)
{
    std::string out = w.clause + ":";
    for (std::size_t d = 0; d < w.derivations.size(); ++d) {
        out += d ? " and " : " ";
        const auto& terms = w.derivations[d];
        for (std::size_t i = 0; i < terms.size(); ++i)
            out += (i ? "+" : "") + format_term(m, terms[i]);
    }
    return out + " = " + m.m_labels()[w.element] + " not in set";
}

} // namespace gsr
