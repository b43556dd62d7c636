#include "heckelab/rmatrix_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace heckelab {

namespace {

using nlohmann::json;

int index_in_range(const json& j, int n, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " index must be an integer", 0);
    const auto v = j.get<long long>();
    if (v < 1 || v > n) throw ParseError(std::string(what) + " index " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]", 0);
    return static_cast<int>(v - 1);
}

std::vector<int> index_pair(const json& entry, const char* key, int n) {
    if (!entry.contains(key) || !entry[key].is_array() || entry[key].size() != 2)
        throw ParseError(std::string("entry field \"") + key + "\" must be an array of two indices", 0);
    return {index_in_range(entry[key][0], n, key), index_in_range(entry[key][1], n, key)};
}

}  // namespace

RMatrixFile parse_rmatrix(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_object()) throw ParseError("R-matrix file must be a JSON object", 0);
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw ParseError("missing integer field \"dim\"", 0);
    const auto dim = doc["dim"].get<long long>();
    if (dim < 1 || dim > 16) throw ParseError("\"dim\" must be in [1, 16]", 0);

    RMatrixFile out;
    out.dim = static_cast<int>(dim);
    if (doc.contains("q")) {
        if (!doc["q"].is_string()) throw ParseError("\"q\" must be a string", 0);
        const auto qs = doc["q"].get<std::string>();
        if (qs != "symbolic") out.q = Rat::parse(qs);
    }
    if (!doc.contains("entries") || !doc["entries"].is_array()) throw ParseError("missing array field \"entries\"", 0);

    out.r = TensorOperator<QScalar>(out.dim, 2);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& e : doc["entries"]) {
        if (!e.is_object()) throw ParseError("each entry must be an object", 0);
        const auto in = index_pair(e, "in", out.dim);
        const auto outi = index_pair(e, "out", out.dim);
        if (!e.contains("value") || !e["value"].is_string()) throw ParseError("entry field \"value\" must be a string", 0);
        const std::uint32_t row = out.r.space().flatten(in), col = out.r.space().flatten(outi);
        if (!seen.emplace(row, col).second)
            throw ParseError("duplicate entry " + out.r.space().label(row) + " -> " + out.r.space().label(col), 0);
        out.r.set(row, col, QScalar::parse(e["value"].get<std::string>()));
    }
    return out;
}

RMatrixFile load_rmatrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_rmatrix(ss.str());
}

std::string dump_rmatrix(const TensorOperator<QScalar>& r, const std::optional<Rat>& q) {
    nlohmann::ordered_json doc;
    doc["dim"] = r.dim();
    doc["q"] = q ? q->str() : std::string("symbolic");
    auto entries = nlohmann::ordered_json::array();
    for (std::uint32_t i = 0; i < r.size(); ++i) {
        for (const auto& [c, v] : r.row(i)) {
            const auto a = r.space().unflatten(i), b = r.space().unflatten(c);
            entries.push_back({{"in", {a[0] + 1, a[1] + 1}}, {"out", {b[0] + 1, b[1] + 1}}, {"value", v.str()}});
        }
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

}  // namespace heckelab
