#include "aci/ideal_ops.hpp"

#include <optional>
#include <stdexcept>

#include "aci/graded.hpp"
#include "aci/hilbert.hpp"
#include "aci/linalg.hpp"

namespace aci {

namespace {

/// u-free part of an elimination basis, moved back to the original ring.
template <Field K>
std::vector<Polynomial<K>> eliminate_u(const GroebnerBasis<K>& gb, int nvars) {
  std::vector<Polynomial<K>> out;
  for (const auto& g : gb.elements()) {
    bool has_u = false;
    for (const auto& t : g.terms())
      if (t.mono[0] != 0) {
        has_u = true;
        break;
      }
    if (!has_u) out.push_back(embed(g, nvars, -1, MonomialOrder::degrevlex()));
  }
  return out;
}

}  // namespace

template <Field K>
GroebnerBasis<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("intersect: ring mismatch");
  const int nvars = a.nvars();
  if (nvars + 1 > kMaxVars) throw std::invalid_argument("intersect: no room for the auxiliary variable");
  const K& k = a.field();
  const auto order = MonomialOrder::elimination(1);
  const auto u = Polynomial<K>::variable(k, nvars + 1, 0).with_order(order);
  const auto one_minus_u = Polynomial<K>::constant(k, nvars + 1, k.one()).with_order(order) - u;
  std::vector<Polynomial<K>> gens;
  for (const auto& g : a.generators()) gens.push_back(u * embed(g, nvars + 1, 1, order));
  for (const auto& g : b.generators()) gens.push_back(one_minus_u * embed(g, nvars + 1, 1, order));
  auto gb = buchberger(k, nvars + 1, std::span<const Polynomial<K>>(gens), order);
  return reduced_groebner(Ideal<K>(k, nvars, eliminate_u(gb, nvars)));
}

template <Field K>
GroebnerBasis<K> ideal_quotient(const Ideal<K>& j, const Polynomial<K>& h) {
  if (h.is_zero()) throw std::invalid_argument("ideal_quotient: h = 0");
  if (!h.is_homogeneous()) throw std::invalid_argument("ideal_quotient: h must be homogeneous");
  if (h.degree() == 0) return reduced_groebner(j);
  auto both = intersect(j, Ideal<K>(j.field(), j.nvars(), {h}));
  std::vector<Polynomial<K>> gens;
  for (const auto& g : both.elements()) gens.push_back(exact_divide(g, h));
  return reduced_groebner(Ideal<K>(j.field(), j.nvars(), std::move(gens)));
}

template <Field K>
GroebnerBasis<K> saturate_irrelevant(const Ideal<K>& j) {
  const K& k = j.field();
  const int nvars = j.nvars();
  GroebnerBasis<K> cur = reduced_groebner(j);
  while (!cur.is_unit() && !cur.is_zero()) {
    std::optional<GroebnerBasis<K>> next;
    for (int i = 0; i < nvars; ++i) {
      auto q = ideal_quotient(cur.ideal(), Polynomial<K>::variable(k, nvars, i));
      next = next ? intersect(next->ideal(), q.ideal()) : std::move(q);
    }
    if (*next == cur) break;
    cur = std::move(*next);
  }
  return cur;
}

template <Field K>
int krull_dimension_of_quotient(const Ideal<K>& j) {
  auto gb = reduced_groebner(j);
  if (gb.is_unit()) throw std::invalid_argument("dimension of S/S requested");
  return hilbert_series(gb).pole_order;
}

template <Field K>
bool is_regular_sequence(const K& field, int nvars, std::span<const Polynomial<K>> fs) {
  if (static_cast<int>(fs.size()) > nvars) return false;
  Ideal<K> ideal(field, nvars, std::vector<Polynomial<K>>(fs.begin(), fs.end()));
  if (ideal.generators().size() != fs.size()) return false;
  auto gb = reduced_groebner(ideal);
  if (gb.is_unit()) return false;
  return hilbert_series(gb).pole_order == nvars - static_cast<int>(fs.size());
}

template <Field K>
std::vector<int> minimal_generator_degrees(const GroebnerBasis<K>& gb) {
  std::vector<int> out;
  if (gb.is_zero()) return out;
  const K& k = gb.field();
  const int nvars = gb.nvars();
  int top = 0;
  for (const auto& g : gb.elements()) top = std::max(top, g.degree());
  for (int deg = 0; deg <= top; ++deg) {
    auto ideal_k = ideal_piece_rows(gb, deg);
    if (ideal_k.rows() == 0) continue;
    std::size_t from_below = 0;
    if (deg > 0) {
      auto lower = ideal_piece_rows(gb, deg - 1);
      if (lower.rows() > 0) {
        auto basis = monomial_basis(nvars, deg);
        auto index = monomial_index(basis);
        auto lower_basis = monomial_basis(nvars, deg - 1);
        Matrix<K> m(0, basis.size(), k);
        for (std::size_t r = 0; r < lower.rows(); ++r)
          for (int v = 0; v < nvars; ++v) {
            std::vector<typename K::Element> row(basis.size(), k.zero());
            for (std::size_t c = 0; c < lower_basis.size(); ++c)
              if (!k.is_zero(lower(r, c))) row[index.at(lower_basis[c] * Monomial::variable(v))] = lower(r, c);
            m.append_row(row);
          }
        from_below = rank(std::move(m), k);
      }
    }
    for (std::size_t i = from_below; i < ideal_k.rows(); ++i) out.push_back(deg);
  }
  return out;
}

#define ACI_INSTANTIATE(K)                                                              \
  template GroebnerBasis<K> intersect(const Ideal<K>&, const Ideal<K>&);                \
  template GroebnerBasis<K> ideal_quotient(const Ideal<K>&, const Polynomial<K>&);      \
  template GroebnerBasis<K> saturate_irrelevant(const Ideal<K>&);                       \
  template int krull_dimension_of_quotient(const Ideal<K>&);                            \
  template bool is_regular_sequence(const K&, int, std::span<const Polynomial<K>>);     \
  template std::vector<int> minimal_generator_degrees(const GroebnerBasis<K>&);

ACI_INSTANTIATE(PrimeField)
ACI_INSTANTIATE(RationalField)

}  // namespace aci
