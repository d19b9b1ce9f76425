#include "aci/linear_change.hpp"

#include <stdexcept>
#include <vector>

namespace aci {

template <Field K>
LinearChange<K>::LinearChange(Matrix<K> m, const K& field) : m_(std::move(m)), field_(field) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) throw std::invalid_argument("linear change must be square");
  if (rank(m_, field_) != m_.rows()) throw std::invalid_argument("linear change must be invertible");
}

template <Field K>
LinearChange<K> LinearChange<K>::identity(const K& field, int nvars) {
  Matrix<K> m(static_cast<std::size_t>(nvars), static_cast<std::size_t>(nvars), field);
  for (int i = 0; i < nvars; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = field.one();
  return LinearChange(std::move(m), field);
}

template <Field K>
LinearChange<K> LinearChange<K>::random(const K& field, int nvars, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> coeff(-range, range);
  const auto n = static_cast<std::size_t>(nvars);
  for (;;) {
    Matrix<K> m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = field.from_int(coeff(rng));
    if (rank(m, field) == n) return LinearChange(std::move(m), field);
  }
}

template <Field K>
Polynomial<K> LinearChange<K>::apply(const Polynomial<K>& f) const {
  if (f.nvars() != nvars()) throw std::invalid_argument("linear change: ring mismatch");
  std::vector<Polynomial<K>> images;
  for (int i = 0; i < nvars(); ++i) {
    std::vector<typename Polynomial<K>::Term> terms;
    for (int j = 0; j < nvars(); ++j) {
      const auto& c = m_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (!field_.is_zero(c)) terms.push_back({Monomial::variable(j), c});
    }
    images.push_back(Polynomial<K>::from_terms(field_, nvars(), std::move(terms), f.order()));
  }
  return substitute(f, std::span<const Polynomial<K>>(images));
}

template <Field K>
std::string LinearChange<K>::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m_.cols(); ++j) s += (j ? "," : "") + field_.to_string(m_(i, j));
    s += "]";
  }
  return s + "]";
}

template class LinearChange<PrimeField>;
template class LinearChange<RationalField>;

}  // namespace aci
