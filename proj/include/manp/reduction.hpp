#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

#include "manp/matrix.hpp"
#include "manp/partition.hpp"
#include "manp/structure.hpp"

namespace manp {

/// A matrix in reduced form relative to B = J_(core, 1^ones), together with
/// the similarity transform T that produced it: T * input * T^-1 == matrix.
template <class F>
struct ReducedPair {
  Partition mu;
  Partition core;
  int ones = 0;
  Partition lambda;
  Matrix<F> matrix;
  Matrix<F> transform;
  Matrix<F> transform_inverse;
};

/// Tracks a matrix under a sequence of similarity transformations E a E^-1,
/// accumulating T (and T^-1) alongside.
template <class F>
class Conjugator {
 public:
  explicit Conjugator(Matrix<F> a);

  const Matrix<F>& matrix() const noexcept { return a_; }
  const Matrix<F>& transform() const noexcept { return t_; }
  const Matrix<F>& transform_inverse() const noexcept { return t_inv_; }

  /// E = I + xi * e(dst, src): row dst += xi * row src, then col src -= xi * col dst.
  void add(std::size_t dst, std::size_t src, const typename F::Element& xi);
  /// E = I + (beta - 1) e(i, i): row i *= beta, col i *= beta^-1.
  void scale(std::size_t i, const typename F::Element& beta);
  /// E swaps basis vectors i and j.
  void swap(std::size_t i, std::size_t j);
  /// General E with known inverse.
  void conjugate(const Matrix<F>& e, const Matrix<F>& e_inv);

 private:
  Matrix<F> a_;
  Matrix<F> t_;
  Matrix<F> t_inv_;
};

/// E a E^-1 for E = I + xi at (row (j, rj), column (i, ri)): row (i, ri) times
/// xi is added to row (j, rj) and column (j, rj) times xi is subtracted from
/// column (i, ri). Block coordinates are 0-based.
template <class F>
Matrix<F> elementary_conjugation(const Matrix<F>& a, const BlockGrid& grid, std::size_t i, std::size_t ri,
                                 std::size_t j, std::size_t rj, const typename F::Element& xi);

struct ReduceOptions {
  /// Re-multiply T * input * T^-1 at the end and compare. Off by default; the
  /// accumulated transform is exact by construction.
  bool check_conjugation = false;
};

/// Called after each stage with the stage name and the intermediate matrix.
template <class F>
using StageObserver = std::function<void(std::string_view stage, const Matrix<F>&)>;

/// Conjugates a (annihilating form for J_mu, nilpotent) into reduced form.
/// Throws PreconditionViolated on bad input and InternalInconsistency if the
/// result fails is_reduced or changes the rank sequence.
template <class F>
ReducedPair<F> reduce(const Matrix<F>& a, const Partition& mu, const ReduceOptions& options = {},
                      const StageObserver<F>& observer = {});

/// The reduced-form predicate for the given mu and lambda (|lambda| must be the
/// number of 1-parts of mu, else false).
template <class F>
bool is_reduced(const Matrix<F>& a, const Partition& mu, const Partition& lambda);

}  // namespace manp
