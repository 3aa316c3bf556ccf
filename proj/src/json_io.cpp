#include "krc/json_io.hpp"

#include <stdexcept>
#include <string>

namespace krc {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw std::invalid_argument(std::string("json: ") + what + " must be an integer");
    return j.get<int>();
}

const json& require_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("json: missing field \"") + key + '"');
    return j.at(key);
}

PosRational rational_value(const json& j) {
    if (j.is_number_integer()) return PosRational::from_string(std::to_string(j.get<long long>()));
    if (j.is_string()) return PosRational::from_string(j.get<std::string>());
    throw std::invalid_argument("json: rational values must be \"p/q\" strings");
}

TropInt tropical_value(const json& j) {
    if (j.is_number_integer()) return TropInt(j.get<long long>());
    if (j.is_string()) return TropInt::from_string(j.get<std::string>());
    throw std::invalid_argument("json: tropical values must be integers");
}

std::pair<int, int> parse_coord_key(const std::string& key) {
    const auto comma = key.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == key.size())
        throw std::invalid_argument("json: coordinate keys must look like \"i,j\"");
    try {
        size_t used = 0;
        const int i = std::stoi(key.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("");
        const std::string rest = key.substr(comma + 1);
        const int j = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
        return {i, j};
    } catch (const std::exception&) {
        throw std::invalid_argument("json: coordinate keys must look like \"i,j\"");
    }
}

std::string coord_key(int i, int j) { return std::to_string(i) + ',' + std::to_string(j); }

ordered_json rows_json(const RectTableau& t) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < t.rows; ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < t.cols; ++c) row.push_back(t.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

RectTableau tableau_from_rows(int n, const json& rows) {
    if (!rows.is_array() || rows.empty()) throw std::invalid_argument("json: \"rows\" must be a non-empty array");
    RectTableau t;
    t.n = n;
    t.rows = static_cast<int>(rows.size());
    t.cols = static_cast<int>(rows.front().is_array() ? rows.front().size() : 0);
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != t.cols)
            throw std::invalid_argument("json: tableau rows must be equal-length arrays");
        for (const auto& cell : row) t.cells.push_back(require_int(cell, "tableau entry"));
    }
    require_valid(t);
    return t;
}

template <typename S, typename ValueFn>
ordered_json vec_json(const VecPoint<S>& v, ValueFn value) {
    ordered_json j;
    j["n"] = v.n;
    ordered_json xs = ordered_json::array();
    for (const S& x : v.x) xs.push_back(value(x));
    j["x"] = std::move(xs);
    return j;
}

template <typename S, typename ParseFn>
VecPoint<S> vec_from_json(const json& j, ParseFn parse) {
    VecPoint<S> v;
    v.n = require_int(require_field(j, "n"), "n");
    const json& xs = require_field(j, "x");
    if (!xs.is_array()) throw std::invalid_argument("json: \"x\" must be an array for one-row points");
    for (const auto& item : xs) v.x.push_back(parse(item));
    if (static_cast<int>(v.x.size()) != v.n) throw std::invalid_argument("json: one-row point needs exactly n coordinates");
    return v;
}

template <typename S, typename ValueFn>
ordered_json geom_json(const GeomPoint<S>& p, ValueFn value) {
    ordered_json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["s"] = value(p.s);
    ordered_json xs = ordered_json::object();
    for (const auto& [coord, val] : p.x) xs[coord_key(coord.first, coord.second)] = value(val);
    j["x"] = std::move(xs);
    return j;
}

template <typename S, typename ParseFn>
GeomPoint<S> geom_from_json(const json& j, ParseFn parse) {
    GeomPoint<S> p;
    p.n = require_int(require_field(j, "n"), "n");
    p.k = require_int(require_field(j, "k"), "k");
    p.s = parse(require_field(j, "s"));
    const json& xs = require_field(j, "x");
    if (!xs.is_object()) throw std::invalid_argument("json: \"x\" must be an object of \"i,j\" keys");
    for (const auto& [key, val] : xs.items()) p.x[parse_coord_key(key)] = parse(val);
    require_point(p);
    return p;
}

} /* namespace */

ordered_json tableau_to_json(const RectTableau& t) {
    ordered_json j;
    j["n"] = t.n;
    j["rows"] = rows_json(t);
    return j;
}

RectTableau tableau_from_json(const json& j) {
    return tableau_from_rows(require_int(require_field(j, "n"), "n"), require_field(j, "rows"));
}

ordered_json tensor_to_json(const TensorElem& x) {
    ordered_json j;
    j["n"] = x.factors.front().n;
    ordered_json factors = ordered_json::array();
    for (const auto& t : x.factors) factors.push_back(rows_json(t));
    j["factors"] = std::move(factors);
    return j;
}

TensorElem tensor_from_json(const json& j) {
    const int n = require_int(require_field(j, "n"), "n");
    const json& factors = require_field(j, "factors");
    if (!factors.is_array() || factors.empty()) throw std::invalid_argument("json: \"factors\" must be a non-empty array");
    TensorElem x;
    for (const auto& rows : factors) x.factors.push_back(tableau_from_rows(n, rows));
    return x;
}

ordered_json vec_to_json(const VecPoint<PosRational>& v) {
    return vec_json(v, [](const PosRational& x) { return ordered_json(x.str()); });
}

ordered_json vec_to_json(const VecPoint<TropInt>& v) {
    return vec_json(v, [](const TropInt& x) { return ordered_json(x.value()); });
}

VecPoint<PosRational> vec_rational_from_json(const json& j) { return vec_from_json<PosRational>(j, rational_value); }

VecPoint<TropInt> vec_tropical_from_json(const json& j) { return vec_from_json<TropInt>(j, tropical_value); }

ordered_json geom_to_json(const GeomPoint<PosRational>& p) {
    return geom_json(p, [](const PosRational& x) { return ordered_json(x.str()); });
}

ordered_json geom_to_json(const GeomPoint<TropInt>& p) {
    return geom_json(p, [](const TropInt& x) { return ordered_json(x.value()); });
}

GeomPoint<PosRational> geom_rational_from_json(const json& j) { return geom_from_json<PosRational>(j, rational_value); }

GeomPoint<TropInt> geom_tropical_from_json(const json& j) { return geom_from_json<TropInt>(j, tropical_value); }

ordered_json report_to_json(const VerifierReport& r) {
    ordered_json j;
    j["case"] = r.label;
    j["checked"] = r.checked;
    j["failures"] = r.failures;
    j["pass"] = r.pass();
    return j;
}

} /* namespace krc */
