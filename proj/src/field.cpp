#include "aci/field.hpp"

namespace aci {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p))
    throw FieldError("modulus must be an odd prime below 2^31, got " + std::to_string(p));
}

PrimeField::Element PrimeField::from_decimal(std::string_view digits, bool negative) const {
  std::uint64_t r = 0;
  for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
  auto e = static_cast<Element>(r);
  return negative ? neg(e) : e;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw FieldError("division by zero in " + name());
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return static_cast<Element>(t < 0 ? t + p_ : t);
}

std::string PrimeField::to_string(Element a) const {
  if (is_negative(a)) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

RationalField::Element RationalField::from_decimal(std::string_view digits, bool negative) const {
  mpz_class z(std::string(digits), 10);
  if (negative) z = -z;
  return Element(z);
}

}  // namespace aci
