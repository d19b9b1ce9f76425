#include "aci/graded.hpp"

#include <numeric>
#include <stdexcept>

#include "aci/hilbert.hpp"
#include "aci/ideal_ops.hpp"

namespace aci {

MonomialIndex monomial_index(const std::vector<Monomial>& basis) {
  MonomialIndex index;
  index.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  return index;
}

namespace {

template <Field K>
const Polynomial<K>* reducer_for(const GroebnerBasis<K>& gb, const Monomial& m) {
  for (const auto& g : gb.elements())
    if (g.leading_monomial().divides(m)) return &g;
  return nullptr;
}

}  // namespace

template <Field K>
Matrix<K> ideal_piece_rows(const GroebnerBasis<K>& gb, int k) {
  const K& field = gb.field();
  auto basis = monomial_basis(gb.nvars(), k);
  auto index = monomial_index(basis);
  Matrix<K> rows(0, basis.size(), field);
  for (const auto& m : basis) {
    const auto* g = reducer_for(gb, m);
    if (g == nullptr) continue;
    const Monomial q = m / g->leading_monomial();
    std::vector<typename K::Element> row(basis.size(), field.zero());
    for (const auto& t : g->terms()) row[index.at(q * t.mono)] = t.coeff;
    rows.append_row(row);
  }
  return rows;
}

template <Field K>
QuotientRing<K>::QuotientRing(GroebnerBasis<K> gb, int max_degree) : gb_(std::move(gb)), max_degree_(max_degree) {
  if (gb_.order() != MonomialOrder::degrevlex()) throw std::invalid_argument("QuotientRing expects a degrevlex basis");
  const K& k = gb_.field();
  levels_.resize(static_cast<std::size_t>(max_degree + 1));
  for (int deg = 0; deg <= max_degree; ++deg) {
    Level& lv = levels_[static_cast<std::size_t>(deg)];
    auto all = monomial_basis(nvars(), deg);
    lv.all_index = monomial_index(all);
    std::vector<bool> is_standard(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      is_standard[i] = !gb_.is_leading_multiple(all[i]);
      if (is_standard[i]) lv.standard.push_back(all[i]);
    }
    const std::size_t dim = lv.standard.size();
    lv.nf.assign(all.size(), Vector(dim, k.zero()));
    // ascending, so every tail monomial is already tabulated
    std::size_t s = dim;
    for (std::size_t i = all.size(); i-- > 0;) {
      if (is_standard[i]) {
        lv.nf[i][--s] = k.one();
        continue;
      }
      const auto* g = reducer_for(gb_, all[i]);
      const Monomial q = all[i] / g->leading_monomial();
      Vector& out = lv.nf[i];
      for (auto t = g->terms().begin() + 1; t != g->terms().end(); ++t) {
        const Vector& sub = lv.nf[lv.all_index.at(q * t->mono)];
        for (std::size_t c = 0; c < dim; ++c)
          if (!k.is_zero(sub[c])) out[c] = k.sub(out[c], k.mul(t->coeff, sub[c]));
      }
    }
  }
}

template <Field K>
const typename QuotientRing<K>::Level& QuotientRing<K>::level(int k) const {
  if (k < 0 || k > max_degree_) throw std::out_of_range("degree " + std::to_string(k) + " beyond prepared range");
  return levels_[static_cast<std::size_t>(k)];
}

template <Field K>
const typename QuotientRing<K>::Vector& QuotientRing<K>::normal_form(const Monomial& m) const {
  const Level& lv = level(m.degree());
  return lv.nf[lv.all_index.at(m)];
}

template <Field K>
typename QuotientRing<K>::Vector QuotientRing<K>::coordinates(const Polynomial<K>& f) const {
  const K& k = field();
  if (f.is_zero()) throw std::invalid_argument("coordinates of zero need a degree");
  if (!f.is_homogeneous()) throw std::invalid_argument("coordinates of a non-homogeneous polynomial");
  Vector out(dim(f.degree()), k.zero());
  for (const auto& t : f.terms()) {
    const Vector& nf = normal_form(t.mono);
    for (std::size_t c = 0; c < out.size(); ++c)
      if (!k.is_zero(nf[c])) out[c] = k.add(out[c], k.mul(t.coeff, nf[c]));
  }
  return out;
}

template <Field K>
Polynomial<K> QuotientRing<K>::polynomial(const Vector& coords, int k) const {
  const auto& st = standard(k);
  std::vector<typename Polynomial<K>::Term> terms;
  for (std::size_t c = 0; c < st.size(); ++c)
    if (!field().is_zero(coords[c])) terms.push_back({st[c], coords[c]});
  return Polynomial<K>::from_sorted_terms(field(), nvars(), MonomialOrder::degrevlex(), std::move(terms));
}

template <Field K>
GradedModule<K>::GradedModule(GroebnerBasis<K> j, int max_degree)
    : ring_(std::move(j), max_degree), subquotient_(false) {
  const K& k = ring_.field();
  for (int deg = 0; deg <= max_degree; ++deg) {
    GradedPiece<K> p;
    p.degree = deg;
    const std::size_t dim = ring_.dim(deg);
    p.basis.basis = Matrix<K>(dim, dim, k);
    for (std::size_t i = 0; i < dim; ++i) {
      p.basis.basis(i, i) = k.one();
      p.basis.pivots.push_back(i);
    }
    pieces_.push_back(std::move(p));
  }
}

template <Field K>
GradedModule<K>::GradedModule(const GroebnerBasis<K>& i, GroebnerBasis<K> j, int max_degree)
    : ring_(std::move(j), max_degree), subquotient_(true) {
  const K& k = ring_.field();
  for (const auto& g : ring_.groebner().elements())
    if (!i.contains(g)) throw std::invalid_argument("subquotient I/J needs J inside I");
  for (int deg = 0; deg <= max_degree; ++deg) {
    const std::size_t dim = ring_.dim(deg);
    Matrix<K> rows(0, dim, k);
    if (dim > 0) {
      auto basis = monomial_basis(ring_.nvars(), deg);
      auto gens = ideal_piece_rows(i, deg);
      for (std::size_t r = 0; r < gens.rows(); ++r) {
        std::vector<typename K::Element> v(dim, k.zero());
        for (std::size_t c = 0; c < basis.size(); ++c) {
          if (k.is_zero(gens(r, c))) continue;
          const auto& nf = ring_.normal_form(basis[c]);
          for (std::size_t s = 0; s < dim; ++s)
            if (!k.is_zero(nf[s])) v[s] = k.add(v[s], k.mul(gens(r, c), nf[s]));
        }
        rows.append_row(v);
      }
    }
    GradedPiece<K> p;
    p.degree = deg;
    p.basis = rref(std::move(rows), k);
    pieces_.push_back(std::move(p));
  }
}

template <Field K>
const GradedPiece<K>& GradedModule<K>::piece(int k) const {
  if (k < 0 || k > max_degree()) throw std::out_of_range("degree " + std::to_string(k) + " beyond prepared range");
  return pieces_[static_cast<std::size_t>(k)];
}

template <Field K>
GradedMap<K> multiplication_map(const GradedModule<K>& module, const Polynomial<K>& h, int k, int form_degree) {
  const QuotientRing<K>& ring = module.ambient();
  const K& field = ring.field();
  int e = form_degree;
  if (!h.is_zero()) {
    if (!h.is_homogeneous()) throw std::invalid_argument("multiplication by a non-homogeneous form");
    if (e >= 0 && e != h.degree()) throw std::invalid_argument("form degree mismatch");
    e = h.degree();
  }
  if (e < 0) throw std::invalid_argument("zero form needs a nominal degree");
  GradedMap<K> map;
  map.source_degree = k;
  map.target_degree = k + e;
  map.source_dim = module.dim(k);
  map.target_dim = module.dim(k + e);
  map.matrix = Matrix<K>(0, map.target_dim, field);
  if (map.source_dim == 0 || map.target_dim == 0 || h.is_zero()) {
    map.matrix = Matrix<K>(map.source_dim, map.target_dim, field);
    return map;
  }
  const auto& src = module.piece(k);
  const auto& dst = module.piece(k + e);
  const auto& st = ring.standard(k);
  const std::size_t amb = ring.dim(k + e);
  // products of each standard monomial with h, in ambient coordinates
  std::vector<std::vector<typename K::Element>> images(st.size());
  for (std::size_t s = 0; s < st.size(); ++s) {
    std::vector<typename K::Element> v(amb, field.zero());
    for (const auto& t : h.terms()) {
      const auto& nf = ring.normal_form(t.mono * st[s]);
      for (std::size_t c = 0; c < amb; ++c)
        if (!field.is_zero(nf[c])) v[c] = field.add(v[c], field.mul(t.coeff, nf[c]));
    }
    images[s] = std::move(v);
  }
  for (std::size_t r = 0; r < src.dim(); ++r) {
    std::vector<typename K::Element> v(amb, field.zero());
    for (std::size_t s = 0; s < st.size(); ++s) {
      const auto& c = src.basis.basis(r, s);
      if (field.is_zero(c)) continue;
      for (std::size_t j = 0; j < amb; ++j)
        if (!field.is_zero(images[s][j])) v[j] = field.add(v[j], field.mul(c, images[s][j]));
    }
    std::vector<typename K::Element> coords(dst.dim());
    for (std::size_t j = 0; j < dst.dim(); ++j) coords[j] = v[dst.basis.pivots[j]];
    map.matrix.append_row(coords);
  }
  map.rank = rank(map.matrix, field);
  return map;
}

namespace {

template <Field K>
void check_system(std::span<const Polynomial<K>> fs) {
  if (fs.size() < 2) throw std::invalid_argument("need f_0..f_n with n >= 1");
  for (std::size_t i = 1; i < fs.size(); ++i)
    if (fs[i].is_zero() || !fs[i].is_homogeneous()) throw std::invalid_argument("f_1..f_n must be nonzero forms");
}

}  // namespace

template <Field K>
int relation_min_degree(std::span<const Polynomial<K>> fs, int d0) {
  check_system(fs);
  const K& k = fs[0].field();
  const int nvars = fs[0].nvars();
  if (!fs[0].is_zero()) d0 = fs[0].degree();
  int bound = d0;
  for (std::size_t i = 1; i < fs.size(); ++i) bound += fs[i].degree();
  auto w = reduced_groebner(Ideal<K>(k, nvars, std::vector<Polynomial<K>>(fs.begin() + 1, fs.end())));
  GradedModule<K> b(std::move(w), bound);
  for (int m = d0; m <= bound; ++m)
    if (!multiplication_map(b, fs[0], m - d0, d0).injective()) return m;
  throw std::runtime_error("no relation found up to degree " + std::to_string(bound));
}

template <Field K>
std::int64_t cayley_bacharach_failure(std::span<const Polynomial<K>> fs, int k) {
  check_system(fs);
  const K& field = fs[0].field();
  const int nvars = fs[0].nvars();
  const int n = static_cast<int>(fs.size()) - 1;
  int s = -n - 1;
  for (std::size_t i = 1; i < fs.size(); ++i) s += fs[i].degree();
  if (k < 0 || k > s) throw std::out_of_range("k must lie in [0, s]");
  Ideal<K> w(field, nvars, std::vector<Polynomial<K>>(fs.begin() + 1, fs.end()));
  auto hw = hilbert_series(w);
  auto hq = hilbert_series(ideal_quotient(w, fs[0]));
  return hilbert_function(hw, s - k) - hilbert_function(hq, s - k);
}

#define ACI_INSTANTIATE(K)                                                                    \
  template Matrix<K> ideal_piece_rows(const GroebnerBasis<K>&, int);                          \
  template class QuotientRing<K>;                                                             \
  template class GradedModule<K>;                                                             \
  template GradedMap<K> multiplication_map(const GradedModule<K>&, const Polynomial<K>&, int, int); \
  template int relation_min_degree(std::span<const Polynomial<K>>, int);                      \
  template std::int64_t cayley_bacharach_failure(std::span<const Polynomial<K>>, int);

ACI_INSTANTIATE(PrimeField)
ACI_INSTANTIATE(RationalField)

}  // namespace aci
