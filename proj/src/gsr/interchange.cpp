#include "gsr/interchange.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gsr {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what)
{
    throw Error(ErrorCode::MalformedTable, what);
}

const json& field(const json& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        malformed(std::string("missing field \"") + key + "\"");
    return *it;
}

std::vector<std::string> labels(const json& obj, const char* key)
{
    const json& arr = field(obj, key);
    if (!arr.is_array())
        malformed(std::string("\"") + key + "\" must be an array of strings");
    std::vector<std::string> out;
    for (const auto& v : arr) {
        if (!v.is_string())
            malformed(std::string("\"") + key + "\" must be an array of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::int64_t entry(const json& v, const std::string& where)
{
    if (!v.is_number_integer())
        malformed(where + " is not an integer");
    return v.get<std::int64_t>();
}

std::vector<std::vector<std::int64_t>> matrix(const json& obj, const char* key)
{
    const json& arr = field(obj, key);
    if (!arr.is_array())
        malformed(std::string("\"") + key + "\" must be an array of arrays");
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_array())
            malformed(std::string(key) + "[" + std::to_string(i) + "] is not an array");
        auto& row = out.emplace_back();
        for (std::size_t j = 0; j < arr[i].size(); ++j)
            row.push_back(entry(arr[i][j], std::string(key) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    return out;
}

std::string quoted(const std::string& s)
{
    return json(s).dump();
}

template <typename Seq>
std::string joined(const Seq& seq, auto&& render)
{
    std::string out = "[";
    bool first = true;
    for (const auto& v : seq) {
        if (!first)
            out += ", ";
        out += render(v);
        first = false;
    }
    return out + "]";
}

} // namespace

RawTables parse_raw_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        malformed("instance must be a JSON object");

    RawTables raw;
    const json& name = field(doc, "name");
    if (!name.is_string())
        malformed("\"name\" must be a string");
    raw.name = name.get<std::string>();
    raw.m_labels = labels(doc, "M");
    raw.g_labels = labels(doc, "Gamma");
    raw.add_m = matrix(doc, "add_M");
    raw.add_g = matrix(doc, "add_Gamma");

    const json& prod = field(doc, "prod");
    if (!prod.is_array())
        malformed("\"prod\" must be an n x g x n array");
    for (std::size_t a = 0; a < prod.size(); ++a) {
        if (!prod[a].is_array())
            malformed("prod[" + std::to_string(a) + "] is not an array");
        auto& plane = raw.prod.emplace_back();
        for (std::size_t al = 0; al < prod[a].size(); ++al) {
            const json& row = prod[a][al];
            const std::string where = "prod[" + std::to_string(a) + "][" + std::to_string(al) + "]";
            if (!row.is_array())
                malformed(where + " is not an array");
            auto& out = plane.emplace_back();
            for (std::size_t b = 0; b < row.size(); ++b)
                out.push_back(entry(row[b], where + "[" + std::to_string(b) + "]"));
        }
    }
    check_shape(raw);
    return raw;
}

std::string to_json(const RawTables& raw)
{
    auto num = [](std::int64_t v) { return std::to_string(v); };
    auto row = [&](const std::vector<std::int64_t>& r) { return joined(r, num); };
    std::ostringstream out;
    out << "{\n";
    out << "  \"name\": " << quoted(raw.name) << ",\n";
    out << "  \"M\": " << joined(raw.m_labels, quoted) << ",\n";
    out << "  \"Gamma\": " << joined(raw.g_labels, quoted) << ",\n";
    out << "  \"add_M\": " << joined(raw.add_m, row) << ",\n";
    out << "  \"add_Gamma\": " << joined(raw.add_g, row) << ",\n";
    out << "  \"prod\": [\n";
    for (std::size_t a = 0; a < raw.prod.size(); ++a)
        out << "    " << joined(raw.prod[a], row) << (a + 1 < raw.prod.size() ? ",\n" : "\n");
    out << "  ]\n}\n";
    return out.str();
}

std::string to_json(const GammaSemiring& m)
{
    return to_json(m.to_raw());
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

GammaSemiring load_instance(const std::string& path)
{
    return seal(parse_raw_json(read_file(path)));
}

} // namespace gsr
