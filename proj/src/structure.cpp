#include "manp/structure.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace manp {

namespace {

std::vector<std::size_t> offsets_of(const Partition& p) {
  std::vector<std::size_t> out;
  std::size_t at = 0;
  for (int part : p) {
    out.push_back(at);
    at += static_cast<std::size_t>(part);
  }
  return out;
}

void require_size(std::size_t rows, std::size_t cols, const Partition& mu, const char* what) {
  const auto n = static_cast<std::size_t>(mu.total());
  if (rows != n || cols != n)
    throw InvalidArgument(std::string(what) + ": matrix is " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " but |mu| = " + std::to_string(n));
}

template <class F>
typename F::Element random_element(const F& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, field.order() - 1);
  return field.element(dist(rng));
}

}  // namespace

BlockGrid::BlockGrid(Partition rows, Partition cols)
    : rows_(std::move(rows)), cols_(std::move(cols)), row_offsets_(offsets_of(rows_)), col_offsets_(offsets_of(cols_)) {}

std::size_t BlockGrid::row(std::size_t block, std::size_t r) const {
  if (block >= rows_.length() || r >= static_cast<std::size_t>(rows_[block]))
    throw InvalidArgument("row block coordinate out of range");
  return row_offsets_[block] + r;
}

std::size_t BlockGrid::col(std::size_t block, std::size_t c) const {
  if (block >= cols_.length() || c >= static_cast<std::size_t>(cols_[block]))
    throw InvalidArgument("column block coordinate out of range");
  return col_offsets_[block] + c;
}

CoreLayout::CoreLayout(const Partition& mu_) : mu(mu_) {
  const CoreSplit split = split_core(mu);
  core = split.core;
  n = static_cast<std::size_t>(mu.total());
  k = core.length();
  m = static_cast<std::size_t>(split.ones);
  std::size_t at = 0;
  for (int part : core) {
    first_row.push_back(at);
    last_col.push_back(at + static_cast<std::size_t>(part) - 1);
    at += static_cast<std::size_t>(part);
  }
}

std::vector<std::size_t> block_starts(const Partition& p, std::size_t base) {
  auto out = offsets_of(p);
  for (auto& x : out) x += base;
  return out;
}

FreeCoordinates free_coordinates(const Partition& mu) {
  std::vector<std::size_t> rows, cols;
  std::size_t at = 0;
  for (int part : mu) {
    rows.push_back(at);
    cols.push_back(at + static_cast<std::size_t>(part) - 1);
    at += static_cast<std::size_t>(part);
  }
  std::sort(cols.begin(), cols.end());
  FreeCoordinates out;
  out.positions.reserve(rows.size() * cols.size());
  for (auto r : rows)
    for (auto c : cols) out.positions.push_back({r, c});
  return out;
}

template <class F>
bool is_commuting_form(const Matrix<F>& a, const Partition& mu) {
  require_size(a.rows(), a.cols(), mu, "is_commuting_form");
  const auto offsets = offsets_of(mu);
  bool toeplitz = true;
  for (std::size_t i = 0; i < mu.length() && toeplitz; ++i) {
    for (std::size_t j = 0; j < mu.length() && toeplitz; ++j) {
      const auto hi = static_cast<std::ptrdiff_t>(mu[i]);
      const auto wj = static_cast<std::ptrdiff_t>(mu[j]);
      const std::ptrdiff_t lowest = std::max<std::ptrdiff_t>(0, wj - hi);
      for (std::ptrdiff_t r = 0; r < hi && toeplitz; ++r) {
        for (std::ptrdiff_t c = 0; c < wj; ++c) {
          const auto& x = a.at(offsets[i] + static_cast<std::size_t>(r), offsets[j] + static_cast<std::size_t>(c));
          const std::ptrdiff_t d = c - r;
          if (d < lowest) {
            if (!a.field().is_zero(x)) toeplitz = false;
          } else if (!(x == a.at(offsets[i], offsets[j] + static_cast<std::size_t>(d)))) {
            toeplitz = false;
          }
          if (!toeplitz) break;
        }
      }
    }
  }
  const Matrix<F> j = jordan_matrix(mu, a.field());
  const bool commutes = a * j == j * a;
  if (toeplitz != commutes)
    throw InternalInconsistency("is_commuting_form: Toeplitz test and commutator test disagree");
  return commutes;
}

template <class F>
bool has_annihilating_support(const Matrix<F>& a, const Partition& mu) {
  require_size(a.rows(), a.cols(), mu, "is_annihilating_form");
  const std::size_t n = a.rows();
  std::vector<char> start(n, 0), end(n, 0);
  std::size_t at = 0;
  for (int part : mu) {
    start[at] = 1;
    end[at + static_cast<std::size_t>(part) - 1] = 1;
    at += static_cast<std::size_t>(part);
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if ((!start[r] || !end[c]) && !a.is_zero(r, c)) return false;
  return true;
}

template <class F>
bool is_annihilating_form(const Matrix<F>& a, const Partition& mu) {
  const bool support = has_annihilating_support(a, mu);
  const Matrix<F> j = jordan_matrix(mu, a.field());
  const bool product = (a * j).is_zero() && (j * a).is_zero();
  if (support != product)
    throw InternalInconsistency("is_annihilating_form: support test and product test disagree");
  return product;
}

template <class F>
CandidateEnumerator<F>::CandidateEnumerator(const Partition& mu, F field, std::uint64_t budget)
    : field_(std::move(field)),
      n_(static_cast<std::size_t>(mu.total())),
      coords_(free_coordinates(mu)),
      order_(field_.order()),
      size_(1) {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (size_ > budget / order_) throw BudgetExceeded(order_, coords_.size(), budget);
    size_ *= order_;
  }
  if (size_ > budget) throw BudgetExceeded(order_, coords_.size(), budget);
}

template <class F>
std::vector<std::uint64_t> CandidateEnumerator<F>::decode(std::uint64_t index) const {
  std::vector<std::uint64_t> digits(coords_.size(), 0);
  for (std::size_t i = coords_.size(); i-- > 0;) {
    digits[i] = index % order_;
    index /= order_;
  }
  return digits;
}

template <class F>
Matrix<F> CandidateEnumerator<F>::build(const std::vector<std::uint64_t>& digits) const {
  Matrix<F> m(field_, n_, n_);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const Position& p = coords_.positions[i];
    m.set(p.row, p.col, field_.element(digits[i]));
  }
  return m;
}

template <class F>
Matrix<F> CandidateEnumerator<F>::at(std::uint64_t index) const {
  if (index >= size_) throw InvalidArgument("candidate index out of range");
  return build(decode(index));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  auto splitmix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return splitmix(splitmix(seed) ^ index);
}

template <class F>
Matrix<F> sample_candidate(const Partition& mu, const F& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(mu.total());
  Matrix<F> a(field, n, n);
  for (const Position& p : free_coordinates(mu).positions) a.set(p.row, p.col, random_element(field, rng));
  return a;
}

template <class F>
Matrix<F> sample_nilpotent_candidate(const Partition& mu, const F& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const CoreLayout layout(mu);
  const std::size_t n = layout.n;
  const std::size_t band = layout.band();
  Matrix<F> a(field, n, n);
  for (const Position& p : free_coordinates(mu).positions)
    if (p.row < band || p.col < band) a.set(p.row, p.col, random_element(field, rng));
  if (layout.m == 0) return a;

  Matrix<F> strict(field, layout.m, layout.m);
  for (std::size_t r = 0; r < layout.m; ++r)
    for (std::size_t c = r + 1; c < layout.m; ++c) strict.set(r, c, random_element(field, rng));
  while (true) {
    Matrix<F> q(field, layout.m, layout.m);
    for (std::size_t r = 0; r < layout.m; ++r)
      for (std::size_t c = 0; c < layout.m; ++c) q.set(r, c, random_element(field, rng));
    if (auto q_inv = inverse(q)) {
      a.set_block(band, band, q * strict * *q_inv);
      return a;
    }
  }
}

#define MANP_INSTANTIATE_STRUCTURE(F)                                          \
  template bool is_commuting_form(const Matrix<F>&, const Partition&);        \
  template bool is_annihilating_form(const Matrix<F>&, const Partition&);     \
  template bool has_annihilating_support(const Matrix<F>&, const Partition&);

MANP_INSTANTIATE_STRUCTURE(Gf2)
MANP_INSTANTIATE_STRUCTURE(PrimeField)
MANP_INSTANTIATE_STRUCTURE(Rationals)

template class CandidateEnumerator<Gf2>;
template class CandidateEnumerator<PrimeField>;
template Matrix<Gf2> sample_candidate(const Partition&, const Gf2&, std::uint64_t);
template Matrix<PrimeField> sample_candidate(const Partition&, const PrimeField&, std::uint64_t);
template Matrix<Gf2> sample_nilpotent_candidate(const Partition&, const Gf2&, std::uint64_t);
template Matrix<PrimeField> sample_nilpotent_candidate(const Partition&, const PrimeField&, std::uint64_t);

}  // namespace manp
