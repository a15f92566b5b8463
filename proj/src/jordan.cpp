#include "manp/jordan.hpp"

#include <string>

#include "manp/linalg.hpp"
#include "manp/structure.hpp"

namespace manp {

int ChainProfile::f_at(int s) const noexcept {
  return s >= 2 && static_cast<std::size_t>(s) < f.size() ? f[static_cast<std::size_t>(s)] : 0;
}

int ChainProfile::g_at(int s) const noexcept {
  return s >= 2 && static_cast<std::size_t>(s) < g.size() ? g[static_cast<std::size_t>(s)] : 0;
}

int ChainProfile::conj_at(int s) const noexcept {
  if (s < 1) return static_cast<int>(lambda.length());
  int count = 0;
  for (int part : lambda)
    if (part >= s) ++count;
  return count;
}

template <class F>
Matrix<F> PowerBlocks<F>::assemble() const {
  const std::size_t top = top_left.rows();
  const std::size_t bottom = bottom_right.rows();
  Matrix<F> out(top_left.field(), top + bottom, top + bottom);
  out.set_block(0, 0, top_left);
  out.set_block(0, top, top_right);
  out.set_block(top, 0, bottom_left);
  out.set_block(top, top, bottom_right);
  return out;
}

template <class F>
PowerBlocks<F> power_blocks(const ReducedPair<F>& r, unsigned s) {
  if (s < 1) throw InvalidArgument("power_blocks: s must be at least 1");
  const std::size_t n = r.matrix.rows();
  const auto m = static_cast<std::size_t>(r.ones);
  const std::size_t n0 = n - m;
  const Matrix<F> a12 = r.matrix.block(0, n0, n0, m);
  const Matrix<F> a21 = r.matrix.block(n0, 0, m, n0);
  const Matrix<F> j = jordan_matrix(r.lambda, r.matrix.field());
  const Matrix<F> j_prev = power(j, s - 1);
  const Matrix<F> j_s = j_prev * j;
  return {a12 * j_prev * a21, a12 * j_s, j_s * a21, j_s * j};
}

namespace {

template <class F>
int rank_of_columns(const Matrix<F>& z, std::size_t from) {
  if (from >= z.cols()) return 0;
  return static_cast<int>(rank(z.block(0, from, z.rows(), z.cols() - from)));
}

}  // namespace

template <class F>
ChainProfile chain_profile(const ReducedPair<F>& r) {
  const CoreLayout layout(r.mu);
  const auto field = r.matrix.field();
  const std::size_t k = layout.k;
  const std::size_t l = r.lambda.length();
  const auto starts = block_starts(r.lambda, layout.band());

  ChainProfile p;
  p.lambda = r.lambda;
  p.k = k;

  // X: k x m rows F_t of A12. W: m x k columns L_u of A21.
  Matrix<F> x(field, k, layout.m), w(field, layout.m, k);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t c = 0; c < layout.m; ++c) {
      x.set(t, c, r.matrix.at(layout.first_row[t], layout.band() + c));
      w.set(c, t, r.matrix.at(layout.band() + c, layout.last_col[t]));
    }

  EchelonBasis<F> columns(field, k), rows(field, k);
  p.e1.assign(l + 1, 0);
  p.e2.assign(l + 1, 0);
  for (std::size_t j = 0; j < l; ++j) {
    Vector<F> xcol(k, field.zero()), yrow(k, field.zero());
    const std::size_t first = starts[j] - layout.band();
    const std::size_t last = first + static_cast<std::size_t>(r.lambda[j]) - 1;
    for (std::size_t t = 0; t < k; ++t) {
      xcol[t] = x.at(t, first);
      yrow[t] = w.at(last, t);
    }
    p.e1[j + 1] = p.e1[j] + (columns.insert(std::move(xcol)) ? 1 : 0);
    p.e2[j + 1] = p.e2[j] + (rows.insert(std::move(yrow)) ? 1 : 0);
  }

  const int top = r.lambda.largest();
  p.f.assign(static_cast<std::size_t>(top) + 2, 0);
  p.g.assign(static_cast<std::size_t>(top) + 2, 0);
  const Matrix<F> j = jordan_matrix(r.lambda, field);
  Matrix<F> x_power = x;  // X J^(s-2)
  for (int s = 2; s <= top + 1; ++s) {
    const Matrix<F> z = x_power * w;
    const auto skip = static_cast<std::size_t>(p.e2[static_cast<std::size_t>(p.conj_at(s))]);
    p.f[static_cast<std::size_t>(s)] = rank_of_columns(z, skip);
    x_power = x_power * j;
  }
  for (int s = 2; s <= top + 1; ++s) {
    const auto before = static_cast<std::size_t>(p.conj_at(s - 1));
    const auto at = static_cast<std::size_t>(p.conj_at(s));
    p.g[static_cast<std::size_t>(s)] =
        p.e1[before] - p.e1[at] + p.e2[before] - p.e2[at] - 2 * p.f[static_cast<std::size_t>(s)];
  }
  return p;
}

int rank_formula(const ChainProfile& p, unsigned s) {
  if (s < 1) throw InvalidArgument("rank_formula: s must be at least 1");
  const int si = static_cast<int>(s);
  int total = 0;
  for (int i = si + 2; i <= p.lambda.largest(); ++i) total += p.conj_at(i);
  const auto next = static_cast<std::size_t>(p.conj_at(si + 1));
  return total + p.e1[next] + p.e2[next] + p.f_at(si + 1);
}

Partition shape_from_profile(const ChainProfile& p, std::size_t n, std::size_t rank_a) {
  std::vector<int> lengths;
  int covered = 0;
  int steps = 0;
  auto add = [&](int length, int count) {
    if (count < 0) throw InternalInconsistency("shape_of_reduced: negative chain count");
    for (int i = 0; i < count; ++i) lengths.push_back(length);
    covered += count * length;
    steps += count * (length - 1);
  };
  int value = 0;
  for (int part : p.lambda) {
    if (part == value) continue;
    value = part;
    const int mult = p.lambda.multiplicity(value);
    const int longer2 = p.f_at(value + 1);
    const int longer1 = p.g_at(value + 1);
    add(value + 2, longer2);
    add(value + 1, longer1);
    add(value, mult - longer2 - longer1);
  }
  const int c = static_cast<int>(rank_a) - steps;
  const int d = static_cast<int>(n) - 2 * c - covered;
  if (c < 0 || d < 0)
    throw InternalInconsistency("shape_of_reduced: rank accounting gives c = " + std::to_string(c) +
                                ", d = " + std::to_string(d));
  add(2, c);
  add(1, d);
  return ord(lengths);
}

template <class F>
Partition shape_of_reduced(const ReducedPair<F>& r) {
  return shape_from_profile(chain_profile(r), r.matrix.rows(), rank(r.matrix));
}

#define MANP_INSTANTIATE_JORDAN(F)                                      \
  template struct PowerBlocks<F>;                                       \
  template PowerBlocks<F> power_blocks(const ReducedPair<F>&, unsigned); \
  template ChainProfile chain_profile(const ReducedPair<F>&);           \
  template Partition shape_of_reduced(const ReducedPair<F>&);

MANP_INSTANTIATE_JORDAN(Gf2)
MANP_INSTANTIATE_JORDAN(PrimeField)
MANP_INSTANTIATE_JORDAN(Rationals)

}  // namespace manp
