#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "manp/errors.hpp"
#include "manp/field.hpp"

namespace manp {

/// Dense row-major matrix over an exact field F. Entries are always canonical
/// field representatives, so structural equality is mathematical equality.
template <class F>
class Matrix {
 public:
  using Field = F;
  using Element = typename F::Element;

  Matrix() = default;
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  const Element& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Element v) { data_[r * cols_ + c] = std::move(v); }
  bool is_zero(std::size_t r, std::size_t c) const { return field_.is_zero(at(r, c)); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  /// row dst += factor * row src
  void add_row_multiple(std::size_t dst, std::size_t src, const Element& factor) {
    if (field_.is_zero(factor)) return;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Element& s = data_[src * cols_ + c];
      if (field_.is_zero(s)) continue;
      Element& d = data_[dst * cols_ + c];
      d = field_.add(d, field_.mul(factor, s));
    }
  }

  /// col dst += factor * col src
  void add_col_multiple(std::size_t dst, std::size_t src, const Element& factor) {
    if (field_.is_zero(factor)) return;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Element& s = data_[r * cols_ + src];
      if (field_.is_zero(s)) continue;
      Element& d = data_[r * cols_ + dst];
      d = field_.add(d, field_.mul(factor, s));
    }
  }

  void scale_row(std::size_t r, const Element& factor) {
    for (std::size_t c = 0; c < cols_; ++c) {
      Element& d = data_[r * cols_ + c];
      d = field_.mul(d, factor);
    }
  }

  void scale_col(std::size_t c, const Element& factor) {
    for (std::size_t r = 0; r < rows_; ++r) {
      Element& d = data_[r * cols_ + c];
      d = field_.mul(d, factor);
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(data_[r * cols_ + a], data_[r * cols_ + b]);
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidArgument("block out of range");
    Matrix b(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b.set(r, c, at(r0 + r, c0 + c));
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw InvalidArgument("block out of range");
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) set(r0 + r, c0 + c, b.at(r, c));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// Bit-packed GF(2) matrix: each row is a run of 64-bit words, bit c of the
/// row is column c. Same interface as the dense template plus word access.
template <>
class Matrix<Gf2> {
 public:
  using Field = Gf2;
  using Element = Gf2::Element;
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Matrix() = default;
  Matrix(Gf2 /*field*/, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + kWordBits - 1) / kWordBits), data_(rows * words_, 0) {}

  static Matrix identity(const Gf2& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  Gf2 field() const noexcept { return {}; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  Element at(std::size_t r, std::size_t c) const {
    return static_cast<Element>((data_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1u);
  }
  void set(std::size_t r, std::size_t c, Element v) {
    Word& w = data_[r * words_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = (v & 1u) ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }
  bool is_zero(std::size_t r, std::size_t c) const { return at(r, c) == 0; }

  bool is_zero() const {
    for (Word w : data_)
      if (w) return false;
    return true;
  }

  Word* row_words(std::size_t r) noexcept { return data_.data() + r * words_; }
  const Word* row_words(std::size_t r) const noexcept { return data_.data() + r * words_; }

  void add_row_multiple(std::size_t dst, std::size_t src, Element factor) {
    if (!(factor & 1u)) return;
    Word* d = row_words(dst);
    const Word* s = row_words(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
  }

  void add_col_multiple(std::size_t dst, std::size_t src, Element factor) {
    if (!(factor & 1u)) return;
    for (std::size_t r = 0; r < rows_; ++r)
      if (at(r, src)) flip(r, dst);
  }

  /// Scaling by a nonzero element of GF(2) is the identity; by zero clears.
  void scale_row(std::size_t r, Element factor) {
    if (factor & 1u) return;
    Word* d = row_words(r);
    for (std::size_t w = 0; w < words_; ++w) d[w] = 0;
  }

  void scale_col(std::size_t c, Element factor) {
    if (factor & 1u) return;
    for (std::size_t r = 0; r < rows_; ++r) set(r, c, 0);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < words_; ++w) std::swap(data_[a * words_ + w], data_[b * words_ + w]);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Element x = at(r, a);
      set(r, a, at(r, b));
      set(r, b, x);
    }
  }

  Matrix transpose() const {
    Matrix t(Gf2{}, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (at(r, c)) t.set(c, r, 1);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidArgument("block out of range");
    Matrix b(Gf2{}, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c)
        if (at(r0 + r, c0 + c)) b.set(r, c, 1);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw InvalidArgument("block out of range");
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) set(r0 + r, c0 + c, b.at(r, c));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> data_;
};

}  // namespace manp
