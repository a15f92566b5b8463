#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "manp/matrix.hpp"
#include "manp/partition.hpp"

namespace manp {

template <class F>
using Vector = std::vector<typename F::Element>;

/// Exact product. Throws InvalidArgument on a dimension mismatch.
template <class F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b);
Matrix<Gf2> operator*(const Matrix<Gf2>& a, const Matrix<Gf2>& b);

template <class F>
Matrix<F> operator+(const Matrix<F>& a, const Matrix<F>& b);
template <class F>
Matrix<F> operator-(const Matrix<F>& a, const Matrix<F>& b);

template <class F>
Vector<F> mul_vec(const Matrix<F>& m, const Vector<F>& v);

/// m^e by iterated multiplication; stops early once a power vanishes.
template <class F>
Matrix<F> power(const Matrix<F>& m, unsigned e);

/// Rank by Gaussian elimination. Pivot: leftmost column, topmost nonzero row.
template <class F>
std::size_t rank(const Matrix<F>& m);
std::size_t rank(const Matrix<Gf2>& m);

template <class F>
bool is_nilpotent(const Matrix<F>& m);
bool is_nilpotent(const Matrix<Gf2>& m);

/// rank(m^0), rank(m^1), ... up to and including the first zero.
/// Throws NotNilpotent when the ranks stabilize above zero.
template <class F>
std::vector<std::size_t> rank_sequence(const Matrix<F>& m);

/// Jordan block sizes of a nilpotent matrix, read off the rank sequence:
/// conjugate(shape)_i = rank(m^(i-1)) - rank(m^i).
template <class F>
Partition nilpotent_shape(const Matrix<F>& m);

/// Block-diagonal upper triangular nilpotent Jordan matrix J_p.
template <class F>
Matrix<F> jordan_matrix(const Partition& p, const F& field);

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m);

/// Basis of the right kernel, one vector per free column of the RREF.
template <class F>
std::vector<Vector<F>> nullspace(const Matrix<F>& m);

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m);

template <class F>
struct Jordanization {
  Matrix<F> transform;  ///< P, columns are Jordan chains
  Matrix<F> inverse;    ///< P^-1
  Partition shape;
};

/// Finds P with P^-1 m P = J_shape using kernel chains of the powers of m.
/// Chains are emitted longest first; within a length, in the order the
/// RREF kernel basis offers them, so a Jordan matrix maps to P = I.
/// The conjugation identity is re-checked before returning.
template <class F>
Jordanization<F> jordanize_nilpotent(const Matrix<F>& m);

/// Incrementally maintained fully reduced echelon basis, for span membership.
template <class F>
class EchelonBasis {
 public:
  EchelonBasis(F field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  /// Adds v if it is independent of the vectors so far; returns whether it was.
  bool insert(Vector<F> v);
  bool contains(Vector<F> v) const;
  std::size_t size() const noexcept { return rows_.size(); }

 private:
  void reduce(Vector<F>& v) const;

  F field_;
  std::size_t dim_;
  std::vector<Vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace manp
