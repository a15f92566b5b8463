#pragma once

#include <cstddef>
#include <vector>

#include "manp/matrix.hpp"
#include "manp/partition.hpp"
#include "manp/reduction.hpp"

namespace manp {

/// Chain counts of a reduced matrix. X^j is the first column of the j-th
/// lambda block of A12, Y_j the last row of the j-th lambda block of A21.
struct ChainProfile {
  Partition lambda;
  std::size_t k = 0;
  std::vector<int> e1;  ///< e1[i] = rank [X^1 .. X^i], i = 0..l
  std::vector<int> e2;  ///< e2[i] = rank [Y_1; ..; Y_i], i = 0..l
  std::vector<int> f;   ///< f[s] for s = 2..lambda_1 + 1; other slots unused
  std::vector<int> g;   ///< same indexing as f

  /// Zero outside 2..lambda_1 + 1.
  int f_at(int s) const noexcept;
  int g_at(int s) const noexcept;
  /// lambda^T_s, 1-based, zero beyond lambda_1.
  int conj_at(int s) const noexcept;
};

/// The four blocks of A^(s+1) for reduced A = [A11 A12; A21 J]:
/// [A12 J^(s-1) A21, A12 J^s; J^s A21, J^(s+1)].
template <class F>
struct PowerBlocks {
  Matrix<F> top_left;
  Matrix<F> top_right;
  Matrix<F> bottom_left;
  Matrix<F> bottom_right;

  Matrix<F> assemble() const;
};

template <class F>
PowerBlocks<F> power_blocks(const ReducedPair<F>& r, unsigned s);

template <class F>
ChainProfile chain_profile(const ReducedPair<F>& r);

/// Closed form for rank(A^(s+1)), s >= 1.
int rank_formula(const ChainProfile& profile, unsigned s);
template <class F>
int rank_formula(const ReducedPair<F>& r, unsigned s) {
  return rank_formula(chain_profile(r), s);
}

/// Jordan shape from the chain profile plus rank accounting for the 2-chains.
/// Throws InternalInconsistency if any derived count is negative.
template <class F>
Partition shape_of_reduced(const ReducedPair<F>& r);
Partition shape_from_profile(const ChainProfile& profile, std::size_t n, std::size_t rank);

}  // namespace manp
