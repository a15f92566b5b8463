#include "manp/reduction.hpp"

#include <limits>
#include <string>

#include "manp/linalg.hpp"

namespace manp {

template <class F>
Conjugator<F>::Conjugator(Matrix<F> a)
    : a_(std::move(a)),
      t_(Matrix<F>::identity(a_.field(), a_.rows())),
      t_inv_(Matrix<F>::identity(a_.field(), a_.rows())) {}

template <class F>
void Conjugator<F>::add(std::size_t dst, std::size_t src, const typename F::Element& xi) {
  if (dst == src) throw InvalidArgument("Conjugator::add: dst == src");
  const auto& field = a_.field();
  if (field.is_zero(xi)) return;
  const auto minus = field.neg(xi);
  a_.add_row_multiple(dst, src, xi);
  a_.add_col_multiple(src, dst, minus);
  t_.add_row_multiple(dst, src, xi);
  t_inv_.add_col_multiple(src, dst, minus);
}

template <class F>
void Conjugator<F>::scale(std::size_t i, const typename F::Element& beta) {
  const auto& field = a_.field();
  const auto beta_inv = field.inv(beta);
  a_.scale_row(i, beta);
  a_.scale_col(i, beta_inv);
  t_.scale_row(i, beta);
  t_inv_.scale_col(i, beta_inv);
}

template <class F>
void Conjugator<F>::swap(std::size_t i, std::size_t j) {
  a_.swap_rows(i, j);
  a_.swap_cols(i, j);
  t_.swap_rows(i, j);
  t_inv_.swap_cols(i, j);
}

template <class F>
void Conjugator<F>::conjugate(const Matrix<F>& e, const Matrix<F>& e_inv) {
  a_ = e * a_ * e_inv;
  t_ = e * t_;
  t_inv_ = t_inv_ * e_inv;
}

template <class F>
Matrix<F> elementary_conjugation(const Matrix<F>& a, const BlockGrid& grid, std::size_t i, std::size_t ri,
                                 std::size_t j, std::size_t rj, const typename F::Element& xi) {
  if (!a.square() || a.rows() != static_cast<std::size_t>(grid.row_partition().total()))
    throw InvalidArgument("elementary_conjugation: matrix does not match the grid");
  const std::size_t src = grid.row(i, ri);
  const std::size_t dst = grid.row(j, rj);
  if (src == dst) throw InvalidArgument("elementary_conjugation: coordinates coincide");
  Matrix<F> out = a;
  out.add_row_multiple(dst, src, xi);
  out.add_col_multiple(src, dst, a.field().neg(xi));
  return out;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Reduction state: the conjugator plus the block bookkeeping of mu and lambda.
template <class F>
class Reducer {
 public:
  Reducer(const Matrix<F>& a, const Partition& mu, const StageObserver<F>& observer)
      : layout_(mu), conj_(a), field_(a.field()), observer_(observer) {}

  ReducedPair<F> run(const Matrix<F>& input, const ReduceOptions& options);

 private:
  const Matrix<F>& a() const { return conj_.matrix(); }
  std::size_t chain_length(std::size_t j) const { return static_cast<std::size_t>(lambda_[j]); }

  void stage(std::string_view name) {
    if (!has_annihilating_support(a(), layout_.mu))
      throw InternalInconsistency("reduce: stage '" + std::string(name) + "' left the annihilating form");
    if (observer_) observer_(name, a());
  }

  void jordanize_band();
  void clear_a12();
  void clear_a21();
  void eliminate_a12();
  void sort_equal_chains();
  void echelon_a21();

  CoreLayout layout_;
  Conjugator<F> conj_;
  F field_;
  const StageObserver<F>& observer_;
  Partition lambda_;
  std::vector<std::size_t> starts_;  ///< a_j: first index of lambda block j
};

template <class F>
void Reducer<F>::jordanize_band() {
  const std::size_t n0 = layout_.band();
  const std::size_t m = layout_.m;
  Jordanization<F> jz;
  try {
    jz = jordanize_nilpotent(a().block(n0, n0, m, m));
  } catch (const NotNilpotent&) {
    throw PreconditionViolated("reduce: matrix is not nilpotent");
  }
  lambda_ = jz.shape;
  starts_ = block_starts(lambda_, n0);
  if (!(jz.transform == Matrix<F>::identity(field_, m))) {
    // diag(I, P^-1) A diag(I, P)
    Matrix<F> e = Matrix<F>::identity(field_, layout_.n);
    Matrix<F> e_inv = e;
    e.set_block(n0, n0, jz.inverse);
    e_inv.set_block(n0, n0, jz.transform);
    conj_.conjugate(e, e_inv);
  }
}

// A12 keeps only the first column of each lambda block: the entry at column
// a_j + p is cancelled against the superdiagonal 1 in row a_j + p - 1.
template <class F>
void Reducer<F>::clear_a12() {
  for (std::size_t t = 0; t < layout_.k; ++t) {
    const std::size_t row = layout_.first_row[t];
    for (std::size_t j = 0; j < lambda_.length(); ++j)
      for (std::size_t p = 1; p < chain_length(j); ++p) {
        const auto x = a().at(row, starts_[j] + p);
        if (!field_.is_zero(x)) conj_.add(row, starts_[j] + p - 1, field_.neg(x));
      }
  }
}

// A21 keeps only the last row of each lambda block. Needs clear_a12 first so
// that column a_j + p + 1 holds nothing but the superdiagonal 1.
template <class F>
void Reducer<F>::clear_a21() {
  for (std::size_t j = 0; j < lambda_.length(); ++j)
    for (std::size_t p = 0; p + 1 < chain_length(j); ++p)
      for (std::size_t u = 0; u < layout_.k; ++u) {
        const auto y = a().at(starts_[j] + p, layout_.last_col[u]);
        if (!field_.is_zero(y)) conj_.add(starts_[j] + p + 1, layout_.last_col[u], y);
      }
}

// Column-by-column reduced echelon form of the corner matrix X (rows F_t,
// columns a_j). Pivot rows are taken in order of first appearance, without
// exchanges. A non-pivot column is cleared by subtracting pivot columns, which
// is a block operation between whole chains.
template <class F>
void Reducer<F>::eliminate_a12() {
  const std::size_t k = layout_.k;
  std::vector<std::size_t> pivot_col_of_row(k, kNone);
  for (std::size_t j = 0; j < lambda_.length(); ++j) {
    const std::size_t col = starts_[j];
    std::size_t pivot = kNone;
    for (std::size_t t = 0; t < k && pivot == kNone; ++t)
      if (pivot_col_of_row[t] == kNone && !a().is_zero(layout_.first_row[t], col)) pivot = t;

    if (pivot != kNone) {
      const std::size_t prow = layout_.first_row[pivot];
      const auto x = a().at(prow, col);
      if (!field_.is_one(x)) conj_.scale(prow, field_.inv(x));
      for (std::size_t t = 0; t < k; ++t) {
        if (t == pivot) continue;
        const auto y = a().at(layout_.first_row[t], col);
        if (!field_.is_zero(y)) conj_.add(layout_.first_row[t], prow, field_.neg(y));
      }
      pivot_col_of_row[pivot] = j;
      continue;
    }
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t s = pivot_col_of_row[t];
      if (s == kNone) continue;
      const auto alpha = a().at(layout_.first_row[t], col);
      if (field_.is_zero(alpha)) continue;
      for (std::size_t p = 0; p < chain_length(j); ++p) conj_.add(starts_[s] + p, starts_[j] + p, alpha);
    }
  }
  // Block operations into a longer chain leave A21 entries above its last row.
  clear_a21();
}

template <class F>
void Reducer<F>::sort_equal_chains() {
  const std::size_t l = lambda_.length();
  auto nonzero_x = [&](std::size_t j) {
    for (std::size_t t = 0; t < layout_.k; ++t)
      if (!a().is_zero(layout_.first_row[t], starts_[j])) return true;
    return false;
  };
  auto swap_chains = [&](std::size_t i, std::size_t j) {
    for (std::size_t p = 0; p < chain_length(i); ++p) conj_.swap(starts_[i] + p, starts_[j] + p);
  };
  std::size_t run = 0;
  while (run < l) {
    std::size_t end = run;
    while (end < l && lambda_[end] == lambda_[run]) ++end;
    // Stable: bubble each pivot column left past the zero columns before it.
    std::size_t filled = run;
    for (std::size_t j = run; j < end; ++j) {
      if (!nonzero_x(j)) continue;
      for (std::size_t q = j; q > filled; --q) swap_chains(q - 1, q);
      ++filled;
    }
    run = end;
  }
}

// Column echelon form of the corner matrix Y (rows b_j, columns L_u) using
// column operations and exchanges among the L_u; rows L_u are zero, so only
// columns move and A12, A22 stay fixed.
template <class F>
void Reducer<F>::echelon_a21() {
  const std::size_t k = layout_.k;
  std::size_t next = 0;
  for (std::size_t j = 0; j < lambda_.length() && next < k; ++j) {
    const std::size_t row = starts_[j] + chain_length(j) - 1;
    std::size_t u = next;
    while (u < k && a().is_zero(row, layout_.last_col[u])) ++u;
    if (u == k) continue;
    if (u != next) conj_.swap(layout_.last_col[u], layout_.last_col[next]);
    const auto pivot_inv = field_.inv(a().at(row, layout_.last_col[next]));
    for (std::size_t v = next + 1; v < k; ++v) {
      const auto y = a().at(row, layout_.last_col[v]);
      if (!field_.is_zero(y)) conj_.add(layout_.last_col[next], layout_.last_col[v], field_.mul(y, pivot_inv));
    }
    ++next;
  }
}

template <class F>
ReducedPair<F> Reducer<F>::run(const Matrix<F>& input, const ReduceOptions& options) {
  jordanize_band();
  stage("jordanize");
  clear_a12();
  stage("clear_a12");
  clear_a21();
  stage("clear_a21");
  eliminate_a12();
  stage("eliminate_a12");
  sort_equal_chains();
  stage("sort_chains");
  echelon_a21();
  stage("echelon_a21");

  if (!is_reduced(a(), layout_.mu, lambda_))
    throw InternalInconsistency("reduce: result is not in reduced form");
  if (rank_sequence(a()) != rank_sequence(input))
    throw InternalInconsistency("reduce: rank sequence changed");
  if (options.check_conjugation) {
    if (!(conj_.transform() * input * conj_.transform_inverse() == a()))
      throw InternalInconsistency("reduce: T A T^-1 differs from the reduced matrix");
    if (!(conj_.transform() * conj_.transform_inverse() == Matrix<F>::identity(field_, layout_.n)))
      throw InternalInconsistency("reduce: accumulated inverse is wrong");
  }
  return ReducedPair<F>{layout_.mu,
                        layout_.core,
                        static_cast<int>(layout_.m),
                        lambda_,
                        conj_.matrix(),
                        conj_.transform(),
                        conj_.transform_inverse()};
}

}  // namespace

template <class F>
ReducedPair<F> reduce(const Matrix<F>& a, const Partition& mu, const ReduceOptions& options,
                      const StageObserver<F>& observer) {
  const auto n = static_cast<std::size_t>(mu.total());
  if (a.rows() != n || a.cols() != n)
    throw PreconditionViolated("reduce: matrix size does not match |mu| = " + std::to_string(n));
  if (!is_annihilating_form(a, mu)) throw PreconditionViolated("reduce: A J_mu != 0 or J_mu A != 0");
  Reducer<F> reducer(a, mu, observer);
  return reducer.run(a, options);
}

template <class F>
bool is_reduced(const Matrix<F>& a, const Partition& mu, const Partition& lambda) {
  const CoreLayout layout(mu);
  if (!a.square() || a.rows() != layout.n) return false;
  if (static_cast<std::size_t>(lambda.total()) != layout.m) return false;
  if (!has_annihilating_support(a, mu)) return false;

  const std::size_t n0 = layout.band();
  const std::size_t k = layout.k;
  const std::size_t l = lambda.length();
  const auto field = a.field();
  const auto starts = block_starts(lambda, n0);

  // A22 == J_lambda
  std::vector<char> superdiagonal(layout.n, 0);
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t p = 0; p + 1 < static_cast<std::size_t>(lambda[j]); ++p) superdiagonal[starts[j] + p] = 1;
  for (std::size_t r = n0; r < layout.n; ++r)
    for (std::size_t c = n0; c < layout.n; ++c) {
      const bool want_one = c == r + 1 && superdiagonal[r];
      if (want_one ? !field.is_one(a.at(r, c)) : !a.is_zero(r, c)) return false;
    }

  // A12: unit entries at (F_t, a_j) only, at most one per row and column.
  std::vector<char> is_start(layout.n, 0);
  for (auto s : starts) is_start[s] = 1;
  std::vector<char> col_nonzero(l, 0);
  for (std::size_t t = 0; t < k; ++t) {
    int in_row = 0;
    for (std::size_t c = n0; c < layout.n; ++c) {
      const auto& x = a.at(layout.first_row[t], c);
      if (field.is_zero(x)) continue;
      if (!is_start[c] || !field.is_one(x)) return false;
      ++in_row;
    }
    if (in_row > 1) return false;
  }
  for (std::size_t j = 0; j < l; ++j) {
    int in_col = 0;
    for (std::size_t t = 0; t < k; ++t)
      if (!a.is_zero(layout.first_row[t], starts[j])) ++in_col;
    if (in_col > 1) return false;
    col_nonzero[j] = in_col == 1;
  }
  // Within a run of equal lambda parts the nonzero columns come first.
  for (std::size_t j = 1; j < l; ++j)
    if (lambda[j] == lambda[j - 1] && col_nonzero[j] && !col_nonzero[j - 1]) return false;

  // A21: entries only in the last row of each lambda block, corner matrix in
  // column echelon form.
  std::vector<char> is_last(layout.n, 0);
  for (std::size_t j = 0; j < l; ++j) is_last[starts[j] + static_cast<std::size_t>(lambda[j]) - 1] = 1;
  for (std::size_t r = n0; r < layout.n; ++r) {
    if (is_last[r]) continue;
    for (std::size_t u = 0; u < k; ++u)
      if (!a.is_zero(r, layout.last_col[u])) return false;
  }
  std::size_t previous_pivot = 0;
  bool seen_zero_column = false;
  for (std::size_t u = 0; u < k; ++u) {
    std::size_t pivot = kNone;
    for (std::size_t j = 0; j < l && pivot == kNone; ++j)
      if (!a.is_zero(starts[j] + static_cast<std::size_t>(lambda[j]) - 1, layout.last_col[u])) pivot = j;
    if (pivot == kNone) {
      seen_zero_column = true;
      continue;
    }
    if (seen_zero_column) return false;
    if (u > 0 && pivot <= previous_pivot) return false;
    previous_pivot = pivot;
  }
  return true;
}

#define MANP_INSTANTIATE_REDUCTION(F)                                                                   \
  template class Conjugator<F>;                                                                         \
  template Matrix<F> elementary_conjugation(const Matrix<F>&, const BlockGrid&, std::size_t, std::size_t, \
                                            std::size_t, std::size_t, const typename F::Element&);     \
  template ReducedPair<F> reduce(const Matrix<F>&, const Partition&, const ReduceOptions&,              \
                                 const StageObserver<F>&);                                              \
  template bool is_reduced(const Matrix<F>&, const Partition&, const Partition&);

MANP_INSTANTIATE_REDUCTION(Gf2)
MANP_INSTANTIATE_REDUCTION(PrimeField)
MANP_INSTANTIATE_REDUCTION(Rationals)

}  // namespace manp
