#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aci/groebner.hpp"
#include "aci/monomial.hpp"

namespace aci {

/// Integer polynomial in t, stored lowest degree first with no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<std::int64_t> coeffs) : c_(coeffs) { trim(); }
  explicit IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly monomial(int degree, std::int64_t coeff = 1);
  /// 1 + t + ... + t^{e-1}
  static IntPoly geometric(int e);

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
  }
  std::int64_t at_one() const;
  std::int64_t leading_coefficient() const { return c_.empty() ? 0 : c_.back(); }

  IntPoly shifted(int k) const;
  /// t^{deg} P(1/t).
  IntPoly reversed() const;
  bool is_palindromic() const { return reversed() == *this; }
  /// Exact division by (1 - t); throws if (1 - t) does not divide.
  IntPoly divided_by_one_minus_t() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// e.g. 1 + t - t^3
  std::string to_string() const;
  /// e.g. [1,1,0,-1]
  std::string to_list() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

/// numerator / (1 - t)^pole_order with numerator(1) != 0.
struct HilbertSeries {
  IntPoly numerator;
  int pole_order = 0;
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

class HilbertError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cancel every (1 - t) factor out of numerator / (1 - t)^pole_order.
HilbertSeries normalize(IntPoly numerator, int pole_order);

/// Series of S / (monomials) in nvars variables, by pivot splitting
/// H(I) = H(I + p) + t^{deg p} H(I : p).
HilbertSeries hilbert_series_of_monomials(std::vector<Monomial> generators, int nvars);

/// Unnormalized numerator over (1 - t)^nvars.
IntPoly hilbert_numerator_of_monomials(std::vector<Monomial> generators);

template <Field K>
HilbertSeries hilbert_series(const GroebnerBasis<K>& gb) {
  if (gb.is_unit()) throw HilbertError("Hilbert series of the unit ideal");
  return hilbert_series_of_monomials(gb.leading_monomials(), gb.nvars());
}

template <Field K>
HilbertSeries hilbert_series(const Ideal<K>& ideal) {
  return hilbert_series(reduced_groebner(ideal));
}

/// Coefficient of t^k in the series expansion.
std::int64_t hilbert_function(const HilbertSeries& h, int k);

/// numerator(1); requires pole order 1.
std::int64_t multiplicity(const HilbertSeries& h);

/// deg numerator: the first degree from which the Hilbert function is
/// constant; requires pole order 1.
int stability_degree(const HilbertSeries& h);

/// G = (1 - t^{d_0}) prod_{j>=1}(1 + ... + t^{d_j - 1}) + t^{sum d_i - n - deg F} reverse(F)
/// for degrees d_0..d_n.
IntPoly theorem_main_prediction(std::span<const int> degrees, const IntPoly& F);

/// Series of the Milnor algebra when the saturation of the Jacobian ideal is
/// a complete intersection of type a_1..a_n, normalized.
HilbertSeries ci_case_prediction(int n, int d, std::span<const int> a);

/// prod_j (1 + ... + t^{a_j - 1}), the numerator of S/(complete intersection).
IntPoly complete_intersection_numerator(std::span<const int> degrees);

}  // namespace aci
