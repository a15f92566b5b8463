#pragma once

#include <json.hpp>

#include "manp/exact_matrix.hpp"

namespace manp {

/// {"field": "gf2" | "gf:<p>" | "rational", "rows": [[...], ...]}. Entries are
/// integers; rationals that are not integers (or do not fit in 64 bits) are
/// written as "num/den" strings.
nlohmann::json matrix_to_json(const ExactMatrix& m);
template <class F>
nlohmann::json matrix_to_json(const Matrix<F>& m) {
  return matrix_to_json(ExactMatrix(m));
}

/// Accepts integers or strings ("7", "-3", "2/5"); prime field entries are
/// reduced mod p. Throws InvalidArgument on malformed documents.
ExactMatrix matrix_from_json(const nlohmann::json& doc);

}  // namespace manp
