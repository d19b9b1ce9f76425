#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace aci {

/// Thrown for arithmetic that has no answer in the field (division by zero,
/// a literal that cannot be represented).
class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime(std::uint64_t n);

/// GF(p) for an odd prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint32_t kDefaultModulus = 65521;

  explicit PrimeField(std::uint32_t p = kDefaultModulus);

  std::uint32_t modulus() const { return p_; }
  std::string name() const { return "gf:" + std::to_string(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  /// Reads a decimal integer of any length, reducing as it goes.
  Element from_decimal(std::string_view digits, bool negative) const;

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// Symmetric representative, so p-1 prints as -1.
  std::string to_string(Element a) const;
  bool is_negative(Element a) const { return a > p_ / 2; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP.
class RationalField {
 public:
  using Element = mpq_class;

  std::string name() const { return "rational"; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_decimal(std::string_view digits, bool negative) const;

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw FieldError("division by zero");
    return Element(1) / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class K>
concept Field = requires(const K& k, const typename K::Element& a) {
  { k.zero() } -> std::convertible_to<typename K::Element>;
  { k.add(a, a) } -> std::convertible_to<typename K::Element>;
  { k.mul(a, a) } -> std::convertible_to<typename K::Element>;
  { k.inv(a) } -> std::convertible_to<typename K::Element>;
  { k.is_zero(a) } -> std::convertible_to<bool>;
  { k.to_string(a) } -> std::convertible_to<std::string>;
};

}  // namespace aci
