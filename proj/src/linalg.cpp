#include "aci/linalg.hpp"

#include <type_traits>
#include <utility>

#include <omp.h>

namespace aci {

namespace {

// Below this many entries the OpenMP region costs more than it saves.
constexpr std::size_t kParallelThreshold = 64 * 64;

template <Field K>
bool parallel_worth_it(const Matrix<K>& m) {
  return m.rows() * m.cols() >= kParallelThreshold;
}

}  // namespace

template <Field K>
void Matrix<K>::append_row(const std::vector<Element>& values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

template <Field K>
void Matrix<K>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

namespace serial {

template <Field K>
Echelon<K> rref(Matrix<K> m, const K& field) {
  Echelon<K> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && field.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    auto inv = field.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = field.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || field.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = field.sub(m(i, j), field.mul(factor, m(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  out.basis = std::move(m);
  return out;
}

template <Field K>
std::size_t rank(Matrix<K> m, const K& field) {
  return serial::rref(std::move(m), field).rank();
}

}  // namespace serial

namespace parallel {

namespace {

/// Forward elimination over GF(p) with lazy 64-bit accumulation; returns the
/// pivot columns and leaves m in (non-reduced) row echelon form.
std::vector<std::size_t> forward_gfp(Matrix<PrimeField>& m, const PrimeField& field, bool normalize) {
  const std::uint64_t p = field.modulus();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    if (normalize) {
      auto inv = field.inv(m(r, c));
      auto* pr = m.row(r);
      for (std::size_t j = c; j < cols; ++j) pr[j] = static_cast<std::uint32_t>(pr[j] * std::uint64_t{inv} % p);
    }
    const auto* pr = m.row(r);
    const std::uint64_t inv_piv = normalize ? 1 : field.inv(pr[c]);
    const std::int64_t rows = static_cast<std::int64_t>(m.rows());
#pragma omp parallel for schedule(static) if (parallel_worth_it(m))
    for (std::int64_t ii = static_cast<std::int64_t>(r) + 1; ii < rows; ++ii) {
      auto* pi = m.row(static_cast<std::size_t>(ii));
      if (pi[c] == 0) continue;
      std::uint64_t factor = (p - pi[c]) * inv_piv % p;
      for (std::size_t j = c; j < cols; ++j)
        pi[j] = static_cast<std::uint32_t>((pi[j] + factor * pr[j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

Echelon<PrimeField> rref_gfp(Matrix<PrimeField> m, const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  Echelon<PrimeField> out;
  out.pivots = forward_gfp(m, field, true);
  const std::size_t cols = m.cols();
  // back substitution, bottom pivot first
  for (std::size_t k = out.pivots.size(); k-- > 0;) {
    const std::size_t c = out.pivots[k];
    const auto* pk = m.row(k);
    const std::int64_t upto = static_cast<std::int64_t>(k);
#pragma omp parallel for schedule(static) if (parallel_worth_it(m))
    for (std::int64_t ii = 0; ii < upto; ++ii) {
      auto* pi = m.row(static_cast<std::size_t>(ii));
      if (pi[c] == 0) continue;
      std::uint64_t factor = p - pi[c];
      for (std::size_t j = c; j < cols; ++j)
        pi[j] = static_cast<std::uint32_t>((pi[j] + factor * pk[j]) % p);
    }
  }
  out.basis = std::move(m);
  return out;
}

/// Bareiss fraction-free rank on integer rows obtained by clearing denominators.
std::size_t rank_bareiss(const Matrix<RationalField>& q) {
  const std::size_t rows = q.rows(), cols = q.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = q(i, j).get_num() * (den / q(i, j).get_den());
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv * cols + c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[piv * cols + j]);
    const mpz_class pivot = a[r * cols + c];
    const std::int64_t nrows = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(dynamic) if (rows * cols >= kParallelThreshold)
    for (std::int64_t ii = static_cast<std::int64_t>(r) + 1; ii < nrows; ++ii) {
      const std::size_t i = static_cast<std::size_t>(ii);
      const mpz_class lead = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = pivot * a[i * cols + j] - lead * a[r * cols + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * cols + j] = v;
      }
      a[i * cols + c] = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

Echelon<RationalField> rref_rational(Matrix<RationalField> m, const RationalField& field) {
  Echelon<RationalField> out;
  std::size_t r = 0;
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && sgn(m(piv, c)) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    mpq_class inv = field.inv(m(r, c));
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    const std::int64_t rows = static_cast<std::int64_t>(m.rows());
#pragma omp parallel for schedule(dynamic) if (parallel_worth_it(m))
    for (std::int64_t ii = 0; ii < rows; ++ii) {
      const std::size_t i = static_cast<std::size_t>(ii);
      if (i == r || sgn(m(i, c)) == 0) continue;
      const mpq_class factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  out.basis = std::move(m);
  return out;
}

}  // namespace

Echelon<PrimeField> rref(Matrix<PrimeField> m, const PrimeField& field) {
  return rref_gfp(std::move(m), field);
}

std::size_t rank(Matrix<PrimeField> m, const PrimeField& field) {
  return forward_gfp(m, field, false).size();
}

Echelon<RationalField> rref(Matrix<RationalField> m, const RationalField& field) {
  return rref_rational(std::move(m), field);
}

std::size_t rank(Matrix<RationalField> m, const RationalField&) {
  return rank_bareiss(m);
}

}  // namespace parallel

template <Field K>
Matrix<K> nullspace(const Matrix<K>& m, const K& field) {
  Echelon<K> e = rref(m, field);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix<K> out(0, m.cols(), field);
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename K::Element> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = field.neg(e.basis(k, free));
    out.append_row(v);
  }
  return out;
}

template <Field K>
bool echelon_coordinates(const Echelon<K>& e, const std::vector<typename K::Element>& v, const K& field,
                         std::vector<typename K::Element>& coords) {
  coords.assign(e.rank(), field.zero());
  std::vector<typename K::Element> rest = v;
  for (std::size_t k = 0; k < e.rank(); ++k) {
    auto c = rest[e.pivots[k]];
    coords[k] = c;
    if (field.is_zero(c)) continue;
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = field.sub(rest[j], field.mul(c, e.basis(k, j)));
  }
  for (const auto& x : rest)
    if (!field.is_zero(x)) return false;
  return true;
}

template class Matrix<PrimeField>;
template class Matrix<RationalField>;
template Echelon<PrimeField> serial::rref(Matrix<PrimeField>, const PrimeField&);
template Echelon<RationalField> serial::rref(Matrix<RationalField>, const RationalField&);
template std::size_t serial::rank(Matrix<PrimeField>, const PrimeField&);
template std::size_t serial::rank(Matrix<RationalField>, const RationalField&);
template Matrix<PrimeField> nullspace(const Matrix<PrimeField>&, const PrimeField&);
template Matrix<RationalField> nullspace(const Matrix<RationalField>&, const RationalField&);
template bool echelon_coordinates(const Echelon<PrimeField>&, const std::vector<PrimeField::Element>&,
                                  const PrimeField&, std::vector<PrimeField::Element>&);
template bool echelon_coordinates(const Echelon<RationalField>&, const std::vector<RationalField::Element>&,
                                  const RationalField&, std::vector<RationalField::Element>&);

}  // namespace aci
