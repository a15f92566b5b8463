#include "manp/linalg.hpp"

#include <array>

namespace manp {

template <class F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("multiply: dimension mismatch");
  if (!(a.field() == b.field())) throw InvalidArgument("multiply: field mismatch");
  const F& field = a.field();
  Matrix<F> c(field, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const auto& x = a.at(i, t);
      if (field.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const auto& y = b.at(t, j);
        if (field.is_zero(y)) continue;
        c.set(i, j, field.add(c.at(i, j), field.mul(x, y)));
      }
    }
  }
  return c;
}

Matrix<Gf2> operator*(const Matrix<Gf2>& a, const Matrix<Gf2>& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("multiply: dimension mismatch");
  Matrix<Gf2> c(Gf2{}, a.rows(), b.cols());
  const std::size_t aw = a.words_per_row();
  const std::size_t bw = b.words_per_row();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto* out = c.row_words(i);
    const auto* arow = a.row_words(i);
    for (std::size_t w = 0; w < aw; ++w) {
      auto bits = arow[w];
      while (bits) {
        const std::size_t t = w * Matrix<Gf2>::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const auto* brow = b.row_words(t);
        for (std::size_t v = 0; v < bw; ++v) out[v] ^= brow[v];
      }
    }
  }
  return c;
}

template <class F>
Matrix<F> operator+(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("add: dimension mismatch");
  Matrix<F> c = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t col = 0; col < a.cols(); ++col)
      c.set(r, col, a.field().add(a.at(r, col), b.at(r, col)));
  return c;
}

template <class F>
Matrix<F> operator-(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("sub: dimension mismatch");
  Matrix<F> c = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t col = 0; col < a.cols(); ++col)
      c.set(r, col, a.field().sub(a.at(r, col), b.at(r, col)));
  return c;
}

template <class F>
Vector<F> mul_vec(const Matrix<F>& m, const Vector<F>& v) {
  if (m.cols() != v.size()) throw InvalidArgument("mul_vec: dimension mismatch");
  const F& field = m.field();
  Vector<F> out(m.rows(), field.zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (field.is_zero(v[c]) || m.is_zero(r, c)) continue;
      out[r] = field.add(out[r], field.mul(m.at(r, c), v[c]));
    }
  return out;
}

template <class F>
Matrix<F> power(const Matrix<F>& m, unsigned e) {
  if (!m.square()) throw InvalidArgument("power: matrix is not square");
  Matrix<F> p = Matrix<F>::identity(m.field(), m.rows());
  for (unsigned i = 0; i < e; ++i) {
    if (p.is_zero()) break;
    p = p * m;
  }
  return p;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  Matrix<F> w = m;
  const F& field = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < w.rows() && w.is_zero(pivot, c)) ++pivot;
    if (pivot == w.rows()) continue;
    w.swap_rows(r, pivot);
    const auto inv = field.inv(w.at(r, c));
    for (std::size_t i = r + 1; i < w.rows(); ++i) {
      if (w.is_zero(i, c)) continue;
      w.add_row_multiple(i, r, field.neg(field.mul(w.at(i, c), inv)));
    }
    ++r;
  }
  return r;
}

std::size_t rank(const Matrix<Gf2>& m) {
  Matrix<Gf2> w = m;
  const std::size_t words = w.words_per_row();
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    const std::size_t wi = c / Matrix<Gf2>::kWordBits;
    const auto bit = Matrix<Gf2>::Word{1} << (c % Matrix<Gf2>::kWordBits);
    std::size_t pivot = r;
    while (pivot < w.rows() && !(w.row_words(pivot)[wi] & bit)) ++pivot;
    if (pivot == w.rows()) continue;
    w.swap_rows(r, pivot);
    const auto* prow = w.row_words(r);
    for (std::size_t i = r + 1; i < w.rows(); ++i) {
      auto* row = w.row_words(i);
      if (!(row[wi] & bit)) continue;
      for (std::size_t v = wi; v < words; ++v) row[v] ^= prow[v];
    }
    ++r;
  }
  return r;
}

template <class F>
bool is_nilpotent(const Matrix<F>& m) {
  if (!m.square()) throw InvalidArgument("is_nilpotent: matrix is not square");
  // m is nilpotent iff m^N = 0 for any N >= n; square until the exponent reaches n.
  Matrix<F> p = m;
  std::size_t exponent = 1;
  while (!p.is_zero()) {
    if (exponent >= m.rows()) return false;
    p = p * p;
    exponent *= 2;
  }
  return true;
}

bool is_nilpotent(const Matrix<Gf2>& m) {
  if (!m.square()) throw InvalidArgument("is_nilpotent: matrix is not square");
  const std::size_t n = m.rows();
  if (n > Matrix<Gf2>::kWordBits) {
    Matrix<Gf2> p = m;
    std::size_t exponent = 1;
    while (!p.is_zero()) {
      if (exponent >= n) return false;
      p = p * p;
      exponent *= 2;
    }
    return true;
  }
  // Single-word rows: square on the stack, no allocation in the hot loop.
  std::array<std::uint64_t, Matrix<Gf2>::kWordBits> cur{}, next{};
  for (std::size_t r = 0; r < n; ++r) cur[r] = m.row_words(r)[0];
  std::size_t exponent = 1;
  while (true) {
    std::uint64_t any = 0;
    for (std::size_t r = 0; r < n; ++r) any |= cur[r];
    if (!any) return true;
    if (exponent >= n) return false;
    for (std::size_t r = 0; r < n; ++r) {
      std::uint64_t acc = 0;
      auto bits = cur[r];
      while (bits) {
        acc ^= cur[static_cast<std::size_t>(std::countr_zero(bits))];
        bits &= bits - 1;
      }
      next[r] = acc;
    }
    cur.swap(next);
    exponent *= 2;
  }
}

template <class F>
std::vector<std::size_t> rank_sequence(const Matrix<F>& m) {
  if (!m.square()) throw InvalidArgument("rank_sequence: matrix is not square");
  std::vector<std::size_t> ranks{m.rows()};
  Matrix<F> p = m;
  while (ranks.back() != 0) {
    const std::size_t r = p.is_zero() ? 0 : rank(p);
    if (r == ranks.back()) throw NotNilpotent();
    ranks.push_back(r);
    if (r != 0) p = p * m;
  }
  return ranks;
}

template <class F>
Partition nilpotent_shape(const Matrix<F>& m) {
  const auto ranks = rank_sequence(m);
  std::vector<int> columns;
  for (std::size_t i = 1; i < ranks.size(); ++i) columns.push_back(static_cast<int>(ranks[i - 1] - ranks[i]));
  return conjugate(Partition(std::move(columns)));
}

template <class F>
Matrix<F> jordan_matrix(const Partition& p, const F& field) {
  const auto n = static_cast<std::size_t>(p.total());
  Matrix<F> j(field, n, n);
  std::size_t offset = 0;
  for (int part : p) {
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(part); ++i)
      j.set(offset + i, offset + i + 1, field.one());
    offset += static_cast<std::size_t>(part);
  }
  return j;
}

template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
  const F& field = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.is_zero(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    m.scale_row(r, field.inv(m.at(r, c)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.is_zero(i, c)) continue;
      m.add_row_multiple(i, r, field.neg(m.at(i, c)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::vector<Vector<F>> nullspace(const Matrix<F>& m) {
  Matrix<F> r = m;
  const auto pivots = row_reduce(r);
  const F& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(r.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (!m.square()) throw InvalidArgument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix<F> aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<F>::identity(m.field(), n));
  const auto pivots = row_reduce(aug);
  if (n != 0 && (pivots.size() < n || pivots[n - 1] != n - 1)) return std::nullopt;
  return aug.block(0, n, n, n);
}

template <class F>
void EchelonBasis<F>::reduce(Vector<F>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& coeff = v[pivots_[i]];
    if (field_.is_zero(coeff)) continue;
    const auto factor = coeff;
    for (std::size_t c = 0; c < dim_; ++c)
      if (!field_.is_zero(rows_[i][c])) v[c] = field_.sub(v[c], field_.mul(factor, rows_[i][c]));
  }
}

template <class F>
bool EchelonBasis<F>::contains(Vector<F> v) const {
  reduce(v);
  for (const auto& x : v)
    if (!field_.is_zero(x)) return false;
  return true;
}

template <class F>
bool EchelonBasis<F>::insert(Vector<F> v) {
  if (v.size() != dim_) throw InvalidArgument("EchelonBasis: dimension mismatch");
  reduce(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && field_.is_zero(v[pivot])) ++pivot;
  if (pivot == dim_) return false;
  const auto inv = field_.inv(v[pivot]);
  for (auto& x : v) x = field_.mul(x, inv);
  // Keep the basis fully reduced: clear the new pivot from the other rows.
  for (auto& row : rows_) {
    if (field_.is_zero(row[pivot])) continue;
    const auto factor = row[pivot];
    for (std::size_t c = 0; c < dim_; ++c)
      if (!field_.is_zero(v[c])) row[c] = field_.sub(row[c], field_.mul(factor, v[c]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

template <class F>
Jordanization<F> jordanize_nilpotent(const Matrix<F>& m) {
  if (!m.square()) throw InvalidArgument("jordanize_nilpotent: matrix is not square");
  const F& field = m.field();
  const std::size_t n = m.rows();

  std::vector<Matrix<F>> powers{Matrix<F>::identity(field, n)};
  while (!powers.back().is_zero()) {
    if (powers.size() > n) throw NotNilpotent();
    powers.push_back(powers.back() * m);
  }
  const std::size_t index = powers.size() - 1;
  std::vector<std::vector<Vector<F>>> kernels;
  kernels.reserve(index + 1);
  for (const auto& p : powers) kernels.push_back(nullspace(p));

  struct Chain {
    Vector<F> top;
    std::size_t length;
  };
  std::vector<Chain> chains;
  for (std::size_t h = index; h >= 1; --h) {
    // Span of ker m^(h-1) plus the level-h vectors of the longer chains found so far.
    EchelonBasis<F> covered(field, n);
    for (const auto& v : kernels[h - 1]) covered.insert(v);
    const std::size_t longer = chains.size();
    for (std::size_t i = 0; i < longer; ++i) {
      Vector<F> v = chains[i].top;
      for (std::size_t s = h; s < chains[i].length; ++s) v = mul_vec(m, v);
      covered.insert(std::move(v));
    }
    for (const auto& w : kernels[h])
      if (covered.insert(w)) chains.push_back({w, h});
  }

  Matrix<F> p(field, n, n);
  std::vector<int> parts;
  std::size_t col = 0;
  for (const auto& chain : chains) {
    Vector<F> v = chain.top;
    for (std::size_t j = chain.length; j >= 1; --j) {
      if (col + j - 1 >= n) throw InternalInconsistency("jordanize_nilpotent: too many chain vectors");
      for (std::size_t r = 0; r < n; ++r) p.set(r, col + j - 1, v[r]);
      v = mul_vec(m, v);
    }
    col += chain.length;
    parts.push_back(static_cast<int>(chain.length));
  }
  if (col != n) throw InternalInconsistency("jordanize_nilpotent: chains do not span the space");

  auto p_inv = inverse(p);
  if (!p_inv) throw InternalInconsistency("jordanize_nilpotent: chain basis is singular");
  Partition shape(std::move(parts));
  if (!(*p_inv * m * p == jordan_matrix(shape, field)))
    throw InternalInconsistency("jordanize_nilpotent: P^-1 m P is not the Jordan matrix");
  return {std::move(p), std::move(*p_inv), std::move(shape)};
}

#define MANP_INSTANTIATE_LINALG(F)                                                 \
  template Matrix<F> operator+(const Matrix<F>&, const Matrix<F>&);                \
  template Matrix<F> operator-(const Matrix<F>&, const Matrix<F>&);                \
  template Vector<F> mul_vec(const Matrix<F>&, const Vector<F>&);                    \
  template Matrix<F> power(const Matrix<F>&, unsigned);                            \
  template std::vector<std::size_t> rank_sequence(const Matrix<F>&);               \
  template Partition nilpotent_shape(const Matrix<F>&);                            \
  template Matrix<F> jordan_matrix(const Partition&, const F&);                    \
  template std::vector<std::size_t> row_reduce(Matrix<F>&);                        \
  template std::vector<Vector<F>> nullspace(const Matrix<F>&);                     \
  template std::optional<Matrix<F>> inverse(const Matrix<F>&);                     \
  template Jordanization<F> jordanize_nilpotent(const Matrix<F>&);                 \
  template class EchelonBasis<F>;

MANP_INSTANTIATE_LINALG(Gf2)
MANP_INSTANTIATE_LINALG(PrimeField)
MANP_INSTANTIATE_LINALG(Rationals)

template Matrix<PrimeField> operator*(const Matrix<PrimeField>&, const Matrix<PrimeField>&);
template Matrix<Rationals> operator*(const Matrix<Rationals>&, const Matrix<Rationals>&);
template std::size_t rank(const Matrix<PrimeField>&);
template std::size_t rank(const Matrix<Rationals>&);
template bool is_nilpotent(const Matrix<PrimeField>&);
template bool is_nilpotent(const Matrix<Rationals>&);

}  // namespace manp
