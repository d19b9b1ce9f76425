#pragma once

#include <cstddef>
#include <vector>

#include "aci/field.hpp"

namespace aci {

/// Dense row-major matrix over K.
template <Field K>
class Matrix {
 public:
  using Element = typename K::Element;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const K& field)
      : rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Element* row(std::size_t r) { return data_.data() + r * cols_; }
  const Element* row(std::size_t r) const { return data_.data() + r * cols_; }

  void append_row(const std::vector<Element>& values);
  void swap_rows(std::size_t a, std::size_t b);
  void truncate_rows(std::size_t rows) {
    data_.resize(rows * cols_);
    rows_ = rows;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// Reduced row echelon form: the nonzero rows, pivots ascending, each pivot
/// entry 1 and the only nonzero entry in its column.
template <Field K>
struct Echelon {
  Matrix<K> basis;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Textbook single-threaded elimination, kept as the reference the parallel
/// kernels are tested against.
namespace serial {
template <Field K>
Echelon<K> rref(Matrix<K> m, const K& field);
template <Field K>
std::size_t rank(Matrix<K> m, const K& field);
}  // namespace serial

/// OpenMP kernels: rows below (and above, for rref) the pivot are updated in
/// parallel. Rationals use Bareiss fraction-free elimination over Z for rank.
namespace parallel {
Echelon<PrimeField> rref(Matrix<PrimeField> m, const PrimeField& field);
std::size_t rank(Matrix<PrimeField> m, const PrimeField& field);
Echelon<RationalField> rref(Matrix<RationalField> m, const RationalField& field);
std::size_t rank(Matrix<RationalField> m, const RationalField& field);
}  // namespace parallel

template <Field K>
Echelon<K> rref(Matrix<K> m, const K& field) {
  return parallel::rref(std::move(m), field);
}

template <Field K>
std::size_t rank(Matrix<K> m, const K& field) {
  return parallel::rank(std::move(m), field);
}

/// Basis (as rows) of the right kernel {v : m v = 0}.
template <Field K>
Matrix<K> nullspace(const Matrix<K>& m, const K& field);

/// Coordinates of v in an echelon basis, or false if v is not in the span.
template <Field K>
bool echelon_coordinates(const Echelon<K>& e, const std::vector<typename K::Element>& v, const K& field,
                         std::vector<typename K::Element>& coords);

}  // namespace aci
