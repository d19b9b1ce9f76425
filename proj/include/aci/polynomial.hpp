#pragma once

#include <span>
#include <string>
#include <vector>

#include "aci/field.hpp"
#include "aci/monomial.hpp"

namespace aci {

/// Sparse polynomial in x_0..x_{nvars-1}. Terms are kept sorted descending in
/// the polynomial's monomial order with no zero coefficients, so two equal
/// polynomials (same order) have identical term vectors.
template <Field K>
class Polynomial {
 public:
  using Element = typename K::Element;
  struct Term {
    Monomial mono;
    Element coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial(K field, int nvars, MonomialOrder order = MonomialOrder::degrevlex());

  static Polynomial from_terms(K field, int nvars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::degrevlex());
  /// Terms already strictly descending in `order` with nonzero coefficients.
  static Polynomial from_sorted_terms(K field, int nvars, MonomialOrder order, std::vector<Term> terms);
  static Polynomial constant(K field, int nvars, Element c);
  static Polynomial monomial(K field, int nvars, const Monomial& m, Element c);
  static Polynomial variable(K field, int nvars, int i);

  const K& field() const { return field_; }
  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Element& leading_coeff() const { return terms_.front().coeff; }
  /// Largest total degree, -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Element coefficient(const Monomial& m) const;

  Polynomial with_order(const MonomialOrder& order) const;
  Polynomial monic() const;
  Polynomial scaled(const Element& c) const;
  Polynomial times_term(const Monomial& m, const Element& c) const;
  /// this - c*m*g, the reduction step.
  Polynomial minus_term_times(const Element& c, const Monomial& m, const Polynomial& g) const;
  /// Homogeneous component of degree k.
  Polynomial component(int k) const;

  Polynomial operator-() const { return scaled(field_.neg(field_.one())); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.multiply(b); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  /// Canonical text in the x0..xn grammar, terms descending.
  std::string to_string() const;

 private:
  void canonicalize();
  Polynomial combine(const Polynomial& b, bool subtract) const;
  Polynomial multiply(const Polynomial& b) const;

  K field_;
  int nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

template <Field K>
Polynomial<K> partial_derivative(const Polynomial<K>& f, int i);

/// Re-embed f into a ring with `nvars` variables, moving x_i to x_{i+offset}.
template <Field K>
Polynomial<K> embed(const Polynomial<K>& f, int nvars, int offset, const MonomialOrder& order);

/// Exact division f / h. Throws std::invalid_argument if h does not divide f.
template <Field K>
Polynomial<K> exact_divide(const Polynomial<K>& f, const Polynomial<K>& h);

/// Substitute x_i by the polynomial images[i].
template <Field K>
Polynomial<K> substitute(const Polynomial<K>& f, std::span<const Polynomial<K>> images);

}  // namespace aci
