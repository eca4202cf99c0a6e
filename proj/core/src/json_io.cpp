#include "rsk/json_io.hpp"

#include <algorithm>
#include <tuple>

namespace rsk {

namespace {

int int_from(const json& j, const char* what) {
    if (!j.is_number_integer() || j.is_number_float())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

Entry entry_from(const json& j) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw ParseError("entries must be nonnegative integers");
    return j.get<Entry>();
}

std::vector<std::vector<Entry>> rows_from(const json& j) {
    if (!j.is_array()) throw ParseError("rows must be an array of arrays");
    std::vector<std::vector<Entry>> rows;
    for (const json& jr : j) {
        if (!jr.is_array()) throw ParseError("rows must be an array of arrays");
        std::vector<Entry> row;
        row.reserve(jr.size());
        for (const json& jv : jr) row.push_back(entry_from(jv));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("partition must be an array");
    std::vector<int> parts;
    parts.reserve(j.size());
    for (const json& jp : j) parts.push_back(int_from(jp, "partition part"));
    try {
        return Partition(std::move(parts));
    } catch (const ShapeMismatch& e) {
        throw ParseError(e.what());
    }
}

json to_json(Box b) { return json::array({b.row, b.col}); }

Box box_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("box must be [row, col]");
    return Box{int_from(j[0], "box row"), int_from(j[1], "box column")};
}

std::vector<Box> boxes_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("box list must be an array");
    std::vector<Box> out;
    out.reserve(j.size());
    for (const json& jb : j) out.push_back(box_from_json(jb));
    return out;
}

json to_json(const NTableau& t) {
    return json{{"shape", to_json(t.shape())}, {"rows", t.rows()}};
}

NTableau tableau_from_json(const json& j) {
    try {
        if (j.is_array()) return NTableau::from_rows(rows_from(j));
        if (!j.is_object() || !j.contains("shape") || !j.contains("rows"))
            throw ParseError("tableau must be {\"shape\":..., \"rows\":...}");
        Partition shape = partition_from_json(j.at("shape"));
        return NTableau(std::move(shape), rows_from(j.at("rows")));
    } catch (const ShapeMismatch& e) {
        throw ParseError(e.what());
    }
}

json to_json(const GtPattern& g) { return json(g.rows()); }

json to_json(const PyramidArray& a) {
    std::vector<std::tuple<int, int, int>> keys;
    keys.reserve(a.entries().size());
    for (const auto& [key, v] : a.entries()) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
        return std::tuple(std::get<2>(x), std::get<0>(x), std::get<1>(x)) <
               std::tuple(std::get<2>(y), std::get<0>(y), std::get<1>(y));
    });
    json out = json::array();
    for (const auto& [i, j, k] : keys)
        out.push_back(json{{"i", i}, {"j", j}, {"k", k}, {"v", a.at(i, j, k)}});
    return out;
}

} // namespace rsk
