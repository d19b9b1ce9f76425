#pragma once

#include <span>
#include <vector>

#include "aci/polynomial.hpp"

namespace aci {

/// Homogeneous ideal of K[x_0..x_{nvars-1}], given by generators.
template <Field K>
class Ideal {
 public:
  Ideal(K field, int nvars, std::vector<Polynomial<K>> generators = {});

  const K& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Polynomial<K>>& generators() const { return generators_; }

 private:
  K field_;
  int nvars_;
  std::vector<Polynomial<K>> generators_;
};

/// Reduced Groebner basis: monic, minimal, tails fully reduced, elements sorted
/// ascending by leading monomial. Two bases of the same ideal in the same
/// order compare equal.
template <Field K>
class GroebnerBasis {
 public:
  GroebnerBasis(K field, int nvars, MonomialOrder order, std::vector<Polynomial<K>> elements)
      : field_(std::move(field)), nvars_(nvars), order_(order), elements_(std::move(elements)) {}

  const K& field() const { return field_; }
  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial<K>>& elements() const { return elements_; }
  std::vector<Monomial> leading_monomials() const;

  bool is_unit() const { return elements_.size() == 1 && elements_.front().leading_monomial().degree() == 0; }
  bool is_zero() const { return elements_.empty(); }
  /// Ideal membership.
  bool contains(const Polynomial<K>& f) const;
  /// Monomial in the leading-term ideal.
  bool is_leading_multiple(const Monomial& m) const;

  Ideal<K> ideal() const { return Ideal<K>(field_, nvars_, elements_); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.elements_ == b.elements_;
  }

 private:
  K field_;
  int nvars_;
  MonomialOrder order_;
  std::vector<Polynomial<K>> elements_;
};

/// Buchberger with normal pair selection and the Gebauer-Moeller criteria.
/// Generators need not be homogeneous here; the public ideal-level entry point
/// is reduced_groebner.
template <Field K>
GroebnerBasis<K> buchberger(const K& field, int nvars, std::span<const Polynomial<K>> generators,
                            const MonomialOrder& order);

template <Field K>
GroebnerBasis<K> reduced_groebner(const Ideal<K>& ideal, const MonomialOrder& order = MonomialOrder::degrevlex());

/// Full reduction: no term of the result is divisible by a leading monomial.
template <Field K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb);

}  // namespace aci
