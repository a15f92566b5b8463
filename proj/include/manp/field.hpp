#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "manp/errors.hpp"

namespace manp {

/// Which exact field a matrix lives over. GF(2) is the prime field with modulus 2.
struct FieldSpec {
  enum class Kind { prime, rational };

  Kind kind = Kind::prime;
  std::uint32_t modulus = 2;

  static FieldSpec gf(std::uint32_t p);
  static FieldSpec rational() { return FieldSpec{Kind::rational, 0}; }

  /// Accepts "gf2", "gf:<p>" (p prime) and "rational".
  static FieldSpec parse(std::string_view text);
  /// Canonical text: "gf2" for p = 2, "gf:<p>" otherwise, "rational".
  std::string to_string() const;

  bool is_finite() const noexcept { return kind == Kind::prime; }
  bool is_gf2() const noexcept { return kind == Kind::prime && modulus == 2; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t p) noexcept;

/// GF(2). Matrices over it use the bit-packed Matrix<Gf2> specialization.
class Gf2 {
 public:
  using Element = std::uint8_t;
  static constexpr bool is_finite = true;

  std::uint64_t order() const noexcept { return 2; }
  FieldSpec spec() const { return FieldSpec::gf(2); }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element add(Element a, Element b) const noexcept { return a ^ b; }
  Element sub(Element a, Element b) const noexcept { return a ^ b; }
  Element mul(Element a, Element b) const noexcept { return a & b; }
  Element neg(Element a) const noexcept { return a; }
  Element inv(Element a) const {
    if (a == 0) throw InvalidArgument("inverse of zero");
    return 1;
  }
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_one(Element a) const noexcept { return a == 1; }
  Element from_integer(std::int64_t v) const noexcept { return static_cast<Element>(v & 1); }
  /// The i-th element in canonical order 0, 1.
  Element element(std::uint64_t i) const noexcept { return static_cast<Element>(i & 1); }
  std::string to_string(Element a) const { return a ? "1" : "0"; }

  friend bool operator==(const Gf2&, const Gf2&) = default;
};

/// GF(p) for an odd or even prime p < 2^31, elements stored as residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr bool is_finite = true;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint64_t order() const noexcept { return p_; }
  FieldSpec spec() const { return FieldSpec::gf(p_); }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element add(Element a, Element b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_one(Element a) const noexcept { return a == 1; }
  Element from_integer(std::int64_t v) const noexcept {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element element(std::uint64_t i) const noexcept { return static_cast<Element>(i % p_); }
  std::string to_string(Element a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_ = 2;
};

/// The rationals with arbitrary-precision numerators and denominators.
class Rationals {
 public:
  using Element = mpq_class;
  static constexpr bool is_finite = false;

  FieldSpec spec() const { return FieldSpec::rational(); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw InvalidArgument("inverse of zero");
    return 1 / a;
  }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  Element from_integer(std::int64_t v) const { return Element(static_cast<long>(v)); }
  /// "p/q" in lowest terms, or "p" when q = 1.
  std::string to_string(const Element& a) const { return a.get_str(); }
  /// Parses "p", "-p" or "p/q"; canonicalizes.
  Element parse(std::string_view text) const;

  friend bool operator==(const Rationals&, const Rationals&) = default;
};

}  // namespace manp
