#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "manp/linalg.hpp"
#include "manp/partition.hpp"
#include "manp/reduction.hpp"

namespace fixtures {

/// Reduced matrix with mu = (3,3,2,1^8), lambda = (3,2,2,1): A11 = 0, unit A12
/// corners at (1,9), (4,12), (7,16), A21 corners (11,3), (15,6), (16,8)
/// (1-based), A22 = J_lambda. Its shape is (5,3,3,3,1,1).
template <class F>
manp::Matrix<F> golden_matrix(const F& field = F{}) {
  const manp::Partition lambda{3, 2, 2, 1};
  manp::Matrix<F> a(field, 16, 16);
  a.set_block(8, 8, manp::jordan_matrix(lambda, field));
  const std::vector<std::pair<int, int>> ones{{1, 9}, {4, 12}, {7, 16}, {11, 3}, {15, 6}, {16, 8}};
  for (auto [r, c] : ones) a.set(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1), field.one());
  return a;
}

inline manp::Partition golden_mu() { return manp::parse_partition("3,3,2,1^8"); }
inline manp::Partition golden_lambda() { return manp::Partition{3, 2, 2, 1}; }

template <class F>
manp::ReducedPair<F> golden_pair(const F& field = F{}) {
  manp::ReducedPair<F> r;
  r.mu = golden_mu();
  r.core = manp::Partition{3, 3, 2};
  r.ones = 8;
  r.lambda = golden_lambda();
  r.matrix = golden_matrix(field);
  r.transform = manp::Matrix<F>::identity(field, 16);
  r.transform_inverse = r.transform;
  return r;
}

/// p(n) by Euler's pentagonal number recurrence.
inline std::vector<std::uint64_t> partition_counts(int up_to) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(up_to) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= up_to; ++n) {
    std::int64_t total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return {p.begin(), p.end()};
}

/// Deterministic small generator for test data.
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

/// Uniform random matrix over a finite field.
template <class F>
manp::Matrix<F> random_matrix(const F& field, std::size_t rows, std::size_t cols, Lcg& rng) {
  manp::Matrix<F> m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, field.element(rng.below(field.order())));
  return m;
}

}  // namespace fixtures
