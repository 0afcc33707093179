#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hdform/form.hpp"
#include "hdform/matrix.hpp"

namespace hdform {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Strict reader for the form file schema
///   {"dim": n, "degree": d, "entries": [{"idx": [...], "value": "p/q"}]}.
/// Indices are 1-based and must be sorted; duplicates, zero values and
/// out-of-range indices are rejected with distinct diagnostics.
SymmetricForm form_from_json(const nlohmann::json& j);
SymmetricForm parse_form(const std::string& text);

nlohmann::json form_to_json(const SymmetricForm& f);

/// Polynomial file schema:
///   {"dim": n, "degree": d, "terms": [{"exp": [...], "value": "p/q"}]}.
HomoPoly poly_from_json(const nlohmann::json& j);
HomoPoly parse_homo_poly(const std::string& text);

nlohmann::json poly_to_json(const HomoPoly& p);

/// Matrices travel as row-major 2D arrays of rational strings.
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j);

}  // namespace hdform
