#pragma once

// Text and JSON forms of jet matrices.
//
// Text form:
//
//     a b m p
//     <entry (0,0)>
//     <entry (0,1)>
//     ...
//
// with a*b entry lines in row-major order, each a jet literal such as "1 + 2*t + t^3".
// p = 0 selects the rationals. Blank lines and lines starting with '#' are ignored.
//
// JSON form: {"rows": a, "cols": b, "order": m, "field": p, "entries": [[[c0, ..., cm], ...], ...]}
// with integer coefficients over F_p and "n" / "n/d" strings over Q.

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <variant>

#include "jetscheme/linalg/jet_matrix.hpp"

namespace jetscheme {

using AnyJetMatrix = std::variant<JetMatrix<ModP>, JetMatrix<Rational>>;

// Dispatches on the first non-blank character: '{' selects JSON, anything else the text form.
// Throws ParseError with a 1-based line and column on malformed input.
AnyJetMatrix parse_matrix(std::string_view input);
AnyJetMatrix parse_matrix_text(std::string_view text);
AnyJetMatrix parse_matrix_json(const nlohmann::json& j);

template <ExactField K>
std::string emit_matrix_text(const JetMatrix<K>& A);
template <ExactField K>
nlohmann::json matrix_to_json(const JetMatrix<K>& A);

std::string emit_matrix_text(const AnyJetMatrix& A);
nlohmann::json matrix_to_json(const AnyJetMatrix& A);

extern template std::string emit_matrix_text(const JetMatrix<ModP>&);
extern template std::string emit_matrix_text(const JetMatrix<Rational>&);
extern template nlohmann::json matrix_to_json(const JetMatrix<ModP>&);
extern template nlohmann::json matrix_to_json(const JetMatrix<Rational>&);

}  // namespace jetscheme
