#pragma once

#include <cstddef>
#include <utility>
#include <variant>

#include "manp/field.hpp"
#include "manp/linalg.hpp"
#include "manp/matrix.hpp"
#include "manp/partition.hpp"

namespace manp {

/// A matrix over a field chosen at run time. GF(2) always uses the
/// bit-packed representation; other primes use PrimeField.
using ExactMatrix = std::variant<Matrix<Gf2>, Matrix<PrimeField>, Matrix<Rationals>>;

/// Calls fn with the field object described by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::rational) return std::forward<Fn>(fn)(Rationals{});
  if (spec.modulus == 2) return std::forward<Fn>(fn)(Gf2{});
  return std::forward<Fn>(fn)(PrimeField(spec.modulus));
}

FieldSpec field_of(const ExactMatrix& m);
std::size_t rows_of(const ExactMatrix& m);
std::size_t cols_of(const ExactMatrix& m);

ExactMatrix zero_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
ExactMatrix jordan_matrix(const Partition& p, const FieldSpec& field);

/// Throws InvalidArgument on dimension or field mismatch.
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
std::size_t rank(const ExactMatrix& m);
bool is_nilpotent(const ExactMatrix& m);
Partition nilpotent_shape(const ExactMatrix& m);

}  // namespace manp
