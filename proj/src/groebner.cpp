#include "aci/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace aci {

template <Field K>
Ideal<K>::Ideal(K field, int nvars, std::vector<Polynomial<K>> generators)
    : field_(std::move(field)), nvars_(nvars) {
  for (auto& g : generators) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator lives in a different ring");
    if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous: " + g.to_string());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

template <Field K>
std::vector<Monomial> GroebnerBasis<K>::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

template <Field K>
bool GroebnerBasis<K>::contains(const Polynomial<K>& f) const {
  return normal_form(f, *this).is_zero();
}

template <Field K>
bool GroebnerBasis<K>::is_leading_multiple(const Monomial& m) const {
  for (const auto& g : elements_)
    if (g.leading_monomial().divides(m)) return true;
  return false;
}

namespace {

template <Field K>
using Terms = std::vector<typename Polynomial<K>::Term>;

/// Reduce `f` fully against the monic polynomials `reducers` (indices into
/// `pool`, only those flagged active).
template <Field K>
Polynomial<K> reduce_full(const Polynomial<K>& f, const std::vector<Polynomial<K>>& pool,
                          const std::vector<std::size_t>& reducers) {
  const K& k = f.field();
  const MonomialOrder& order = f.order();
  Terms<K> rem;
  Terms<K> cur = f.terms();
  std::size_t pos = 0;
  Terms<K> next;
  while (pos < cur.size()) {
    const auto& lt = cur[pos];
    const Polynomial<K>* g = nullptr;
    for (std::size_t idx : reducers) {
      if (pool[idx].leading_monomial().divides(lt.mono)) {
        g = &pool[idx];
        break;
      }
    }
    if (g == nullptr) {
      rem.push_back(std::move(cur[pos]));
      ++pos;
      continue;
    }
    // cur[pos..] - c * m * g, where the leading terms cancel
    const auto c = lt.coeff;
    const Monomial m = lt.mono / g->leading_monomial();
    next.clear();
    next.reserve(cur.size() - pos + g->size());
    std::size_t i = pos + 1;
    auto j = g->terms().begin() + 1;
    const auto jend = g->terms().end();
    while (i < cur.size() || j != jend) {
      if (j == jend) {
        next.push_back(std::move(cur[i++]));
        continue;
      }
      Monomial mj = j->mono * m;
      int cmp = i == cur.size() ? -1 : order.compare(cur[i].mono, mj);
      if (cmp > 0) {
        next.push_back(std::move(cur[i++]));
      } else if (cmp < 0) {
        next.push_back({mj, k.neg(k.mul(c, j->coeff))});
        ++j;
      } else {
        auto v = k.sub(cur[i].coeff, k.mul(c, j->coeff));
        if (!k.is_zero(v)) next.push_back({mj, std::move(v)});
        ++i;
        ++j;
      }
    }
    std::swap(cur, next);
    pos = 0;
  }
  return Polynomial<K>::from_sorted_terms(k, f.nvars(), order, std::move(rem));
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

template <Field K>
Polynomial<K> s_polynomial(const Polynomial<K>& a, const Polynomial<K>& b, const Monomial& l) {
  // both monic
  const K& k = a.field();
  Polynomial<K> sa = a.times_term(l / a.leading_monomial(), k.one());
  return sa.minus_term_times(k.one(), l / b.leading_monomial(), b);
}

}  // namespace

template <Field K>
GroebnerBasis<K> buchberger(const K& field, int nvars, std::span<const Polynomial<K>> generators,
                            const MonomialOrder& order) {
  std::vector<Polynomial<K>> pool;
  std::vector<std::size_t> active;
  std::vector<CriticalPair> pairs;

  auto add = [&](Polynomial<K> h) {
    const std::size_t hi = pool.size();
    const Monomial lh = h.leading_monomial();
    pool.push_back(std::move(h));
    // Gebauer-Moeller update
    std::vector<CriticalPair> fresh;
    for (std::size_t g : active) fresh.push_back({g, hi, lcm(pool[g].leading_monomial(), lh)});
    std::vector<CriticalPair> kept;
    while (!fresh.empty()) {
      CriticalPair p = fresh.back();
      fresh.pop_back();
      bool keep = pool[p.i].leading_monomial().coprime(lh);
      if (!keep) {
        keep = true;
        for (const auto& q : fresh)
          if (q.lcm.divides(p.lcm)) keep = false;
        for (const auto& q : kept)
          if (q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::vector<CriticalPair> survivors;
    for (const auto& p : kept)
      if (!pool[p.i].leading_monomial().coprime(lh)) survivors.push_back(p);
    // chain criterion on old pairs
    std::vector<CriticalPair> old;
    old.reserve(pairs.size() + survivors.size());
    for (const auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && !(lcm(pool[p.i].leading_monomial(), lh) == p.lcm) &&
                  !(lcm(pool[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) old.push_back(p);
    }
    for (auto& p : survivors) old.push_back(p);
    pairs = std::move(old);
    std::vector<std::size_t> still;
    for (std::size_t g : active)
      if (!lh.divides(pool[g].leading_monomial())) still.push_back(g);
    still.push_back(hi);
    active = std::move(still);
  };

  // seed with generators in increasing order so low-degree reducers exist first
  std::vector<Polynomial<K>> gens;
  for (const auto& g : generators) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator lives in a different ring");
    auto h = g.with_order(order);
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  std::sort(gens.begin(), gens.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (const auto& g : gens) {
    auto h = reduce_full(g, pool, active);
    if (!h.is_zero()) add(h.monic());
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const CriticalPair& a, const CriticalPair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      return order.compare(a.lcm, b.lcm) < 0;
    });
    CriticalPair p = *best;
    *best = pairs.back();
    pairs.pop_back();
    auto s = s_polynomial(pool[p.i], pool[p.j], p.lcm);
    auto h = reduce_full(s, pool, active);
    if (!h.is_zero()) add(h.monic());
  }

  // interreduce the minimal basis
  std::vector<Polynomial<K>> minimal;
  for (std::size_t g : active) minimal.push_back(pool[g]);
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial<K>> reduced;
  reduced.reserve(minimal.size());
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(j);
    const auto& g = minimal[i];
    Terms<K> tail(g.terms().begin() + 1, g.terms().end());
    auto tail_poly = Polynomial<K>::from_sorted_terms(field, nvars, order, std::move(tail));
    auto red = reduce_full(tail_poly, minimal, others);
    Terms<K> terms;
    terms.reserve(red.size() + 1);
    terms.push_back(g.leading());
    for (const auto& t : red.terms()) terms.push_back(t);
    reduced.push_back(Polynomial<K>::from_sorted_terms(field, nvars, order, std::move(terms)));
  }
  return GroebnerBasis<K>(field, nvars, order, std::move(reduced));
}

template <Field K>
GroebnerBasis<K> reduced_groebner(const Ideal<K>& ideal, const MonomialOrder& order) {
  return buchberger(ideal.field(), ideal.nvars(), std::span<const Polynomial<K>>(ideal.generators()), order);
}

template <Field K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
  if (f.nvars() != gb.nvars()) throw std::invalid_argument("normal_form: ring mismatch");
  std::vector<std::size_t> all(gb.elements().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return reduce_full(f.with_order(gb.order()), gb.elements(), all);
}

#define ACI_INSTANTIATE(K)                                                                                        \
  template class Ideal<K>;                                                                                        \
  template class GroebnerBasis<K>;                                                                                \
  template GroebnerBasis<K> buchberger(const K&, int, std::span<const Polynomial<K>>, const MonomialOrder&);     \
  template GroebnerBasis<K> reduced_groebner(const Ideal<K>&, const MonomialOrder&);                             \
  template Polynomial<K> normal_form(const Polynomial<K>&, const GroebnerBasis<K>&);

ACI_INSTANTIATE(PrimeField)
ACI_INSTANTIATE(RationalField)

}  // namespace aci
