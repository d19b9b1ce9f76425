#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "aci/groebner.hpp"
#include "aci/linalg.hpp"

namespace aci {

using MonomialIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;

MonomialIndex monomial_index(const std::vector<Monomial>& basis);

/// Rows spanning I_k over monomial_basis(nvars, k): one multiple of a basis
/// element per nonstandard monomial, so the rows are independent and there are
/// exactly dim I_k of them.
template <Field K>
Matrix<K> ideal_piece_rows(const GroebnerBasis<K>& gb, int k);

/// S/J in degrees 0..max_degree, with the normal form of every monomial
/// tabulated in standard-monomial coordinates.
template <Field K>
class QuotientRing {
 public:
  using Element = typename K::Element;
  using Vector = std::vector<Element>;

  QuotientRing(GroebnerBasis<K> gb, int max_degree);

  const GroebnerBasis<K>& groebner() const { return gb_; }
  const K& field() const { return gb_.field(); }
  int nvars() const { return gb_.nvars(); }
  int max_degree() const { return max_degree_; }

  /// Standard monomials of degree k, descending.
  const std::vector<Monomial>& standard(int k) const { return level(k).standard; }
  std::size_t dim(int k) const { return k < 0 ? 0 : level(k).standard.size(); }
  /// Normal form of a degree-k monomial.
  const Vector& normal_form(const Monomial& m) const;
  /// Normal form of a homogeneous polynomial of degree k.
  Vector coordinates(const Polynomial<K>& f) const;
  Polynomial<K> polynomial(const Vector& coords, int k) const;

 private:
  struct Level {
    std::vector<Monomial> standard;
    MonomialIndex all_index;
    std::vector<Vector> nf;
  };
  const Level& level(int k) const;

  GroebnerBasis<K> gb_;
  int max_degree_;
  std::vector<Level> levels_;
};

/// Degree-k piece of S/J or of I/J: basis rows in (S/J)_k coordinates, reduced
/// echelon so coordinates of a member are its entries at the pivots.
template <Field K>
struct GradedPiece {
  int degree = 0;
  Echelon<K> basis;
  std::size_t dim() const { return basis.rank(); }
};

/// S/J, or the submodule I/J of it for an ideal I containing J.
template <Field K>
class GradedModule {
 public:
  GradedModule(GroebnerBasis<K> j, int max_degree);
  GradedModule(const GroebnerBasis<K>& i, GroebnerBasis<K> j, int max_degree);

  const QuotientRing<K>& ambient() const { return ring_; }
  bool is_subquotient() const { return subquotient_; }
  int max_degree() const { return ring_.max_degree(); }
  const GradedPiece<K>& piece(int k) const;
  std::size_t dim(int k) const { return k < 0 ? 0 : piece(k).dim(); }

 private:
  QuotientRing<K> ring_;
  bool subquotient_;
  std::vector<GradedPiece<K>> pieces_;
};

/// Multiplication by a form between graded pieces. Row r of `matrix` is the
/// image of source basis vector r in target coordinates.
template <Field K>
struct GradedMap {
  int source_degree = 0;
  int target_degree = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Matrix<K> matrix;
  std::size_t rank = 0;
  bool injective() const { return rank == source_dim; }
  bool surjective() const { return rank == target_dim; }
};

/// h: M_k -> M_{k + deg h}. A zero h needs its nominal degree.
template <Field K>
GradedMap<K> multiplication_map(const GradedModule<K>& module, const Polynomial<K>& h, int k,
                                int form_degree = -1);

/// Smallest m with f_0: (S/W)_{m-d_0} -> (S/W)_m not injective, W = (f_1..f_n).
/// A zero f_0 is taken with the nominal degree d0.
template <Field K>
int relation_min_degree(std::span<const Polynomial<K>> fs, int d0);

/// dim ((W : f_0)/W)_{s-k} with s = sum_{i>=1} d_i - n - 1.
template <Field K>
std::int64_t cayley_bacharach_failure(std::span<const Polynomial<K>> fs, int k);

}  // namespace aci
