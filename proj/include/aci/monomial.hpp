#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace aci {

/// Hard cap on ring size: n+1 <= 7 plus one auxiliary elimination variable.
inline constexpr int kMaxVars = 8;

/// Exponent vector for x_0..x_{nvars-1} with cached total degree.
/// Unused trailing slots are always zero, so comparison and hashing never
/// need the variable count.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() { exps_.fill(0); }
  explicit Monomial(std::initializer_list<int> exps);

  static Monomial variable(int i, int power = 1);

  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  void set(int i, int e);
  int degree() const { return degree_; }

  bool divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; caller guarantees b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const;
  std::string to_string(int nvars) const;

  /// Shift exponents right by `offset` slots (for embedding into a ring with
  /// auxiliary leading variables) or left for negative offsets.
  Monomial shifted(int offset) const;

 private:
  std::array<Exponent, kMaxVars> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// degrevlex, or a two-block product order whose first block holds the
/// `block` leading variables (degrevlex inside each block).
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, BlockElimination };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
  static MonomialOrder elimination(int block) { return MonomialOrder(Kind::BlockElimination, block); }

  Kind kind() const { return kind_; }
  int block() const { return block_; }
  std::string name() const;

  /// Three-way comparison: >0 when a is larger.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind kind, int block) : kind_(kind), block_(block) {}
  static int degrevlex_range(const Monomial& a, const Monomial& b, int lo, int hi);

  Kind kind_;
  int block_;
};

/// All monomials of degree k in nvars variables, descending in `order`.
std::vector<Monomial> monomial_basis(int nvars, int k,
                                     const MonomialOrder& order = MonomialOrder::degrevlex());

/// C(nvars-1+k, nvars-1).
std::size_t count_monomials(int nvars, int k);

}  // namespace aci
