#include "hdform/json_io.hpp"

#include <algorithm>
#include <set>

namespace hdform {

namespace {

Rational rational_field(const nlohmann::json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

int int_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) throw ParseError(std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

}  // namespace

SymmetricForm form_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("form document must be a JSON object");
    const int dim = int_field(j, "dim");
    const int degree = int_field(j, "degree");
    if (dim < 1 || degree < 2) throw ParseError("form needs dim >= 1 and degree >= 2");
    if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("missing 'entries' array");
    SymmetricForm f(dim, degree);
    std::set<MultiIndex> seen;
    for (const auto& item : j["entries"]) {
        if (!item.is_object() || !item.contains("idx") || !item.contains("value"))
            throw ParseError("each entry needs 'idx' and 'value'");
        if (!item["idx"].is_array()) throw ParseError("'idx' must be an array");
        MultiIndex idx;
        for (const auto& v : item["idx"]) {
            if (!v.is_number_integer()) throw ParseError("'idx' entries must be integers");
            idx.push_back(v.get<int>());
        }
        if (static_cast<int>(idx.size()) != degree) throw ParseError("multi-index length mismatch");
        if (!std::is_sorted(idx.begin(), idx.end())) throw ParseError("multi-index not sorted");
        for (int i : idx)
            if (i < 1 || i > dim) throw ParseError("multi-index entry out of range");
        if (!seen.insert(idx).second) throw ParseError("duplicate multi-index");
        const Rational value = rational_field(item["value"], "entry value");
        if (value == 0) throw ParseError("zero entry value (omit the entry instead)");
        f.set_entry(idx, value);
    }
    return f;
}

SymmetricForm parse_form(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return form_from_json(j);
}

nlohmann::json form_to_json(const SymmetricForm& f) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [idx, value] : f.entries())
        entries.push_back({{"idx", idx}, {"value", to_string(value)}});
    return {{"dim", f.dim()}, {"degree", f.degree()}, {"entries", entries}};
}

HomoPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("polynomial document must be a JSON object");
    const int dim = int_field(j, "dim");
    const int degree = int_field(j, "degree");
    if (dim < 1 || degree < 1) throw ParseError("polynomial needs dim >= 1 and degree >= 1");
    if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("missing 'terms' array");
    HomoPoly p(dim, degree);
    std::set<ExponentVec> seen;
    for (const auto& item : j["terms"]) {
        if (!item.is_object() || !item.contains("exp") || !item.contains("value"))
            throw ParseError("each term needs 'exp' and 'value'");
        ExponentVec exps;
        for (const auto& v : item["exp"]) {
            if (!v.is_number_integer()) throw ParseError("'exp' entries must be integers");
            exps.push_back(v.get<int>());
        }
        if (static_cast<int>(exps.size()) != dim) throw ParseError("exponent vector length mismatch");
        int sum = 0;
        for (int e : exps) {
            if (e < 0) throw ParseError("negative exponent");
            sum += e;
        }
        if (sum != degree) throw ParseError("term is not homogeneous of the stated degree");
        if (!seen.insert(exps).second) throw ParseError("duplicate exponent vector");
        const Rational value = rational_field(item["value"], "term value");
        if (value == 0) throw ParseError("zero term value (omit the term instead)");
        p.set_coeff(exps, value);
    }
    return p;
}

HomoPoly parse_homo_poly(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return poly_from_json(j);
}

nlohmann::json poly_to_json(const HomoPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exps, value] : p.terms())
        terms.push_back({{"exp", exps}, {"value", to_string(value)}});
    return {{"dim", p.dim()}, {"degree", p.degree()}, {"terms", terms}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty 2D array");
    const int rows = static_cast<int>(j.size());
    if (!j[0].is_array()) throw ParseError("matrix rows must be arrays");
    const int cols = static_cast<int>(j[0].size());
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) throw ParseError("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.at(r, c) = rational_field(j[r][c], "matrix entry");
    }
    return m;
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json vec_to_json(const Vec& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : v) out.push_back(to_string(r));
    return out;
}

Vec vec_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("vector must be an array");
    Vec out;
    for (const auto& item : j) out.push_back(rational_field(item, "vector entry"));
    return out;
}

}  // namespace hdform
