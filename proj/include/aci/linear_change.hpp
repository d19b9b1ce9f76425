#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "aci/linalg.hpp"
#include "aci/polynomial.hpp"

namespace aci {

/// Invertible linear substitution x_i -> sum_j m(i, j) x_j.
template <Field K>
class LinearChange {
 public:
  /// Throws std::invalid_argument if m is singular or not square.
  LinearChange(Matrix<K> m, const K& field);

  static LinearChange identity(const K& field, int nvars);
  /// Entries drawn from [-range, range], redrawn until invertible.
  static LinearChange random(const K& field, int nvars, std::mt19937_64& rng, int range = 3);

  const Matrix<K>& matrix() const { return m_; }
  int nvars() const { return static_cast<int>(m_.rows()); }
  Polynomial<K> apply(const Polynomial<K>& f) const;
  std::string to_string() const;

 private:
  Matrix<K> m_;
  K field_;
};

template <Field K>
Polynomial<K> apply_linear_change(const Polynomial<K>& f, const LinearChange<K>& phi) {
  return phi.apply(f);
}

}  // namespace aci
