#include "manp/field.hpp"

#include <charconv>

namespace manp {

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::gf(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw InvalidArgument("field modulus " + std::to_string(p) + " is not a supported prime");
  return FieldSpec{Kind::prime, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "gf2") return gf(2);
  if (text == "rational") return rational();
  if (text.starts_with("gf:")) {
    const std::string_view digits = text.substr(3);
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
      throw InvalidArgument("bad field '" + std::string(text) + "'");
    return gf(p);
  }
  throw InvalidArgument("unknown field '" + std::string(text) + "' (expected gf2, gf:<p>, rational)");
}

std::string FieldSpec::to_string() const {
  if (kind == Kind::rational) return "rational";
  if (modulus == 2) return "gf2";
  return "gf:" + std::to_string(modulus);
}

PrimeField::PrimeField(std::uint32_t p) : p_(FieldSpec::gf(p).modulus) {}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return from_integer(t);
}

Rationals::Element Rationals::parse(std::string_view text) const {
  Element value;
  if (text.empty() || value.set_str(std::string(text), 10) != 0)
    throw InvalidArgument("bad rational '" + std::string(text) + "'");
  if (value.get_den() == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

}  // namespace manp
