#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "manp/linalg.hpp"
#include "manp/matrix.hpp"
#include "manp/partition.hpp"

namespace manp {

struct Position {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Rows partitioned by one partition, columns by another. All indices are 0-based.
class BlockGrid {
 public:
  BlockGrid(Partition rows, Partition cols);
  explicit BlockGrid(const Partition& square) : BlockGrid(square, square) {}

  const Partition& row_partition() const noexcept { return rows_; }
  const Partition& col_partition() const noexcept { return cols_; }
  const std::vector<std::size_t>& row_offsets() const noexcept { return row_offsets_; }
  const std::vector<std::size_t>& col_offsets() const noexcept { return col_offsets_; }

  /// Global row of row r inside row block i. Throws InvalidArgument when out of range.
  std::size_t row(std::size_t block, std::size_t r) const;
  std::size_t col(std::size_t block, std::size_t c) const;

 private:
  Partition rows_;
  Partition cols_;
  std::vector<std::size_t> row_offsets_;
  std::vector<std::size_t> col_offsets_;
};

/// Index bookkeeping for B = J_mu with mu = (core, 1^m): the core blocks come
/// first, the m singleton blocks occupy the trailing band [n - m, n).
struct CoreLayout {
  explicit CoreLayout(const Partition& mu);

  Partition mu;
  Partition core;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::vector<std::size_t> first_row;  ///< F_t: first index of core block t
  std::vector<std::size_t> last_col;   ///< L_t: last index of core block t

  std::size_t band() const noexcept { return n - m; }
};

/// First indices of the blocks of p laid out from base.
std::vector<std::size_t> block_starts(const Partition& p, std::size_t base);

/// Positions that may be nonzero in A with A J_mu = J_mu A = 0: every row that
/// starts a block of mu crossed with every column that ends one. Row-major order.
struct FreeCoordinates {
  std::vector<Position> positions;

  std::size_t size() const noexcept { return positions.size(); }
};

FreeCoordinates free_coordinates(const Partition& mu);

/// Block-Toeplitz test and commutator test; both are evaluated and must agree.
template <class F>
bool is_commuting_form(const Matrix<F>& a, const Partition& mu);

/// Support test against free_coordinates and the product test a J = J a = 0;
/// both are evaluated and must agree.
template <class F>
bool is_annihilating_form(const Matrix<F>& a, const Partition& mu);

/// Support test only. Used in hot loops where the product test is redundant.
template <class F>
bool has_annihilating_support(const Matrix<F>& a, const Partition& mu);

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Odometer over all assignments of field elements to the free coordinates of
/// mu. The last coordinate varies fastest; values follow field.element(i).
/// Candidates are indexed 0 .. size()-1, so disjoint ranges can be handed out.
template <class F>
class CandidateEnumerator {
 public:
  CandidateEnumerator(const Partition& mu, F field, std::uint64_t budget = kDefaultBudget);

  std::uint64_t size() const noexcept { return size_; }
  const FreeCoordinates& coordinates() const noexcept { return coords_; }

  /// The candidate with the given index.
  Matrix<F> at(std::uint64_t index) const;

  /// Calls fn(const Matrix<F>&) for indices in [first, last). The matrix is
  /// updated in place between calls; copy it to keep it.
  template <class Fn>
  void for_each(std::uint64_t first, std::uint64_t last, Fn&& fn) const {
    if (first > last || last > size_) throw InvalidArgument("candidate range out of bounds");
    if (first == last) return;
    std::vector<std::uint64_t> digits = decode(first);
    Matrix<F> current = build(digits);
    const std::size_t count = coords_.size();
    for (std::uint64_t index = first;;) {
      fn(static_cast<const Matrix<F>&>(current));
      if (++index == last) break;
      for (std::size_t i = count; i-- > 0;) {
        const Position& p = coords_.positions[i];
        if (++digits[i] == order_) {
          digits[i] = 0;
          current.set(p.row, p.col, field_.element(0));
        } else {
          current.set(p.row, p.col, field_.element(digits[i]));
          break;
        }
      }
    }
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for_each(0, size_, std::forward<Fn>(fn));
  }

 private:
  std::vector<std::uint64_t> decode(std::uint64_t index) const;
  Matrix<F> build(const std::vector<std::uint64_t>& digits) const;

  F field_;
  std::size_t n_;
  FreeCoordinates coords_;
  std::uint64_t order_;
  std::uint64_t size_;
};

/// Key for the sample-th draw under a seed (splitmix64 finalizer over both).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Uniform values on the free coordinates, from a generator seeded with seed.
template <class F>
Matrix<F> sample_candidate(const Partition& mu, const F& field, std::uint64_t seed);

/// Like sample_candidate, but the ones band is Q N Q^-1 with N strictly upper
/// triangular and Q invertible, both random, so the result is always nilpotent.
template <class F>
Matrix<F> sample_nilpotent_candidate(const Partition& mu, const F& field, std::uint64_t seed);

}  // namespace manp
