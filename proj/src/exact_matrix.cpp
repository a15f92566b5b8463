#include "manp/exact_matrix.hpp"

namespace manp {

FieldSpec field_of(const ExactMatrix& m) {
  return std::visit([](const auto& x) { return x.field().spec(); }, m);
}

std::size_t rows_of(const ExactMatrix& m) {
  return std::visit([](const auto& x) { return x.rows(); }, m);
}

std::size_t cols_of(const ExactMatrix& m) {
  return std::visit([](const auto& x) { return x.cols(); }, m);
}

ExactMatrix zero_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols) {
  return with_field(field, [&](auto f) -> ExactMatrix { return Matrix<decltype(f)>(f, rows, cols); });
}

ExactMatrix jordan_matrix(const Partition& p, const FieldSpec& field) {
  return with_field(field, [&](auto f) -> ExactMatrix { return jordan_matrix(p, f); });
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  return std::visit(
      [](const auto& x, const auto& y) -> ExactMatrix {
        if constexpr (std::is_same_v<decltype(x), decltype(y)>) {
          return x * y;
        } else {
          throw InvalidArgument("multiply: field mismatch");
        }
      },
      a, b);
}

std::size_t rank(const ExactMatrix& m) {
  return std::visit([](const auto& x) { return rank(x); }, m);
}

bool is_nilpotent(const ExactMatrix& m) {
  return std::visit([](const auto& x) { return is_nilpotent(x); }, m);
}

Partition nilpotent_shape(const ExactMatrix& m) {
  return std::visit([](const auto& x) { return nilpotent_shape(x); }, m);
}

}  // namespace manp
