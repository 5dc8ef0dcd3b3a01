#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "schemebounds/matrix.hpp"
#include "schemebounds/rational.hpp"
#include "schemebounds/scheme.hpp"

namespace schemebounds {

/// Malformed scheme document: bad JSON, missing fields, wrong types, or
/// non-canonical number strings. Distinct from a well-formed document
/// describing parameters that fail validation.
class scheme_parse_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/*
 * Scheme document format (JSON):
 *
 *   {
 *     "name":    "hamming-3",
 *     "classes": 3,
 *     "order":   "8",
 *     "P":       [["1","3","3","1"], ...],   (classes+1) x (classes+1)
 *     "Q":       [...]                        optional; derived if absent
 *   }
 *
 * All numeric entries are canonical integer or rational strings, so the
 * format is exact at any magnitude. Unknown keys are ignored.
 */

namespace detail {

inline RationalMatrix matrix_from_json(const nlohmann::ordered_json& j, std::size_t dim,
                                       const std::string& key) {
    if (!j.is_array() || j.size() != dim) {
        throw scheme_parse_error("field '" + key + "' must be an array of " +
                                 std::to_string(dim) + " rows");
    }
    RationalMatrix m(dim, dim, Rational(0));
    for (std::size_t r = 0; r < dim; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != dim) {
            throw scheme_parse_error("field '" + key + "' row " + std::to_string(r) +
                                     " must have " + std::to_string(dim) + " entries");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            if (!row[c].is_string()) {
                throw scheme_parse_error("field '" + key + "' entry (" + std::to_string(r) +
                                         "," + std::to_string(c) + ") must be a string");
            }
            try {
                m(r, c) = parse_rational(row[c].get<std::string>());
            } catch (const rational_parse_error& err) {
                throw scheme_parse_error("field '" + key + "' entry (" + std::to_string(r) +
                                         "," + std::to_string(c) + "): " + err.what());
            }
        }
    }
    return m;
}

inline nlohmann::ordered_json matrix_to_json(const RationalMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

/// Parses a scheme document. Throws scheme_parse_error on malformed input;
/// if Q is absent and P is singular, singular_matrix_error propagates.
inline SchemeParameters parse_scheme_text(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw scheme_parse_error(std::string("invalid JSON: ") + err.what());
    }
    if (!j.is_object()) throw scheme_parse_error("document must be a JSON object");
    for (const char* key : {"name", "classes", "order", "P"}) {
        if (!j.contains(key)) throw scheme_parse_error(std::string("missing field '") + key + "'");
    }
    SchemeParameters s;
    if (!j["name"].is_string()) throw scheme_parse_error("field 'name' must be a string");
    s.name = j["name"].get<std::string>();
    if (!j["classes"].is_number_unsigned() || j["classes"].get<std::uint64_t>() == 0) {
        throw scheme_parse_error("field 'classes' must be a positive integer");
    }
    s.classes = static_cast<std::size_t>(j["classes"].get<std::uint64_t>());
    if (s.classes > 4096) throw scheme_parse_error("field 'classes' is implausibly large");
    if (!j["order"].is_string()) {
        throw scheme_parse_error("field 'order' must be an integer string");
    }
    try {
        s.order = parse_integer(j["order"].get<std::string>());
    } catch (const rational_parse_error& err) {
        throw scheme_parse_error(std::string("field 'order': ") + err.what());
    }
    if (s.order <= 0) throw scheme_parse_error("field 'order' must be positive");

    const std::size_t dim = s.classes + 1;
    s.P = detail::matrix_from_json(j["P"], dim, "P");
    if (j.contains("Q")) {
        s.Q = detail::matrix_from_json(j["Q"], dim, "Q");
    } else {
        s.Q = derive_q_from_p(s.P, s.order);
    }
    return s;
}

/// Serializes parameters to the document format, always including Q.
/// Output is canonical: parse followed by write reproduces it byte for byte.
inline std::string write_scheme_text(const SchemeParameters& s) {
    nlohmann::ordered_json j;
    j["name"] = s.name;
    j["classes"] = s.classes;
    j["order"] = s.order.str();
    j["P"] = detail::matrix_to_json(s.P);
    j["Q"] = detail::matrix_to_json(s.Q);
    return j.dump(2) + "\n";
}

}  // namespace schemebounds
