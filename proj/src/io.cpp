#include "ipset/io.hpp"

#include "ipset/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace ipset {

using nlohmann::json;

namespace {

// Integers become JSON numbers when they fit in 64 bits, decimal strings otherwise.
json integer_json(const Integer& v)
{
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Integer json_integer(const json& j)
{
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<std::int64_t>()), 10);
    if (j.is_string())
        return parse_integer(j.get<std::string>());
    throw ParseError("expected an integer, got " + j.dump());
}

Rational json_rational(const json& j)
{
    if (!j.is_string())
        throw ParseError("expected a \"p/q\" string, got " + j.dump());
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

json embedding_points(const EmbeddedPointSet& e)
{
    json pts = json::array();
    for (const auto& p : e.points)
        pts.push_back({{"x", p.x.str()}, {"y", {{"coeff", p.y_coeff.str()}, {"radicand", integer_json(e.k)}}}});
    return pts;
}

} // namespace

DistanceMatrix parse_matrix(std::istream& in)
{
    std::string token;
    auto next = [&](const std::string& what) {
        if (!(in >> token))
            throw ParseError("unexpected end of input, expected " + what);
        try {
            return parse_integer(token);
        } catch (const DomainError&) {
            throw ParseError("expected " + what + ", got '" + token + "'");
        }
    };
    const Integer n = next("point count");
    if (n < 1 || n > 1000)
        throw ParseError("point count " + n.get_str() + " out of range [1, 1000]");
    const auto size = static_cast<std::size_t>(n.get_ui());
    DistanceMatrix m(size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            m.at(i, j) = next("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    if (in >> token)
        throw ParseError("trailing input '" + token + "'");
    if (auto why = m.invariant_violation())
        throw ParseError("invalid distance matrix: " + *why);
    return m;
}

DistanceMatrix parse_matrix_text(const std::string& text)
{
    std::istringstream in(text);
    return parse_matrix(in);
}

DistanceMatrix read_matrix_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    return parse_matrix(in);
}

std::string format_matrix(const DistanceMatrix& m)
{
    std::ostringstream out;
    out << m.size() << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j)
            out << (j ? " " : "") << m(i, j).get_str();
        out << '\n';
    }
    return out.str();
}

std::string format_embedding_text(const EmbeddedPointSet& e)
{
    std::ostringstream out;
    for (const auto& p : e.points)
        out << '(' << p.x.str() << ", " << p.y_coeff.str() << "*sqrt(" << e.k.get_str() << "))\n";
    return out.str();
}

std::string format_embedding_json(const EmbeddedPointSet& e)
{
    return json{{"radicand", integer_json(e.k)}, {"points", embedding_points(e)}}.dump();
}

EmbeddedPointSet parse_embedding_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw ParseError("embedding must be an object with a \"points\" array");
    EmbeddedPointSet e;
    e.k = j.contains("radicand") ? json_integer(j["radicand"]) : Integer(1);
    if (e.k < 1 || !is_squarefree(e.k))
        throw ParseError("radicand " + e.k.get_str() + " is not a positive square-free integer");
    for (const auto& p : j["points"]) {
        if (!p.is_object() || !p.contains("x") || !p.contains("y") || !p["y"].is_object() ||
            !p["y"].contains("coeff"))
            throw ParseError("point must look like {\"x\": \"p/q\", \"y\": {\"coeff\": \"r/s\", \"radicand\": k}}");
        if (p["y"].contains("radicand") && json_integer(p["y"]["radicand"]) != e.k)
            throw ParseError("points use different radicands");
        e.points.push_back({json_rational(p["x"]), json_rational(p["y"]["coeff"])});
    }
    return e;
}

std::string format_record(const DistanceMatrix& m, const std::optional<Integer>& characteristic,
                          const std::optional<EmbeddedPointSet>& embedding)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j)
            row.push_back(integer_json(m(i, j)));
        rows.push_back(row);
    }
    json rec = {{"n", m.size()}, {"diameter", integer_json(m.diameter())}};
    rec["characteristic"] = characteristic ? integer_json(*characteristic) : json(nullptr);
    rec["matrix"] = rows;
    if (embedding)
        rec["points"] = embedding_points(*embedding);
    return rec.dump();
}

std::string format_record(const FoundSet& f)
{
    return format_record(f.matrix, f.characteristic, embed(f.matrix));
}

DistanceMatrix parse_record(const std::string& line)
{
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array())
        throw ParseError("record has no \"matrix\" array");
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : j["matrix"]) {
        if (!r.is_array())
            throw ParseError("matrix rows must be arrays");
        rows.emplace_back();
        for (const auto& v : r)
            rows.back().push_back(json_integer(v));
    }
    for (const auto& r : rows)
        if (r.size() != rows.size())
            throw ParseError("matrix is not square");
    auto m = DistanceMatrix::from_rows(rows);
    if (auto why = m.invariant_violation())
        throw ParseError("invalid distance matrix: " + *why);
    return m;
}

std::set<OuterKey> read_checkpoint(const std::filesystem::path& path)
{
    std::set<OuterKey> keys;
    std::ifstream in(path);
    if (!in)
        return keys;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(line);
        std::string d, k, extra;
        if (!(fields >> d))
            continue;
        if (!(fields >> k) || (fields >> extra))
            throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected \"d k\"");
        try {
            const Integer dv = parse_integer(d);
            if (!dv.fits_slong_p() || dv < 1)
                throw DomainError("diameter out of range");
            keys.insert({dv.get_si(), parse_integer(k)});
        } catch (const DomainError& e) {
            throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return keys;
}

std::string format_checkpoint_line(const OuterKey& key)
{
    return std::to_string(key.d) + " " + key.k.get_str() + "\n";
}

} // namespace ipset
