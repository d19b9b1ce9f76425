#include "aci/polynomial.hpp"

#include <stdexcept>
#include <unordered_map>

namespace aci {

template <Field K>
Polynomial<K>::Polynomial(K field, int nvars, MonomialOrder order)
    : field_(std::move(field)), nvars_(nvars), order_(order) {
  if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("unsupported variable count");
}

template <Field K>
Polynomial<K> Polynomial<K>::from_terms(K field, int nvars, std::vector<Term> terms, MonomialOrder order) {
  Polynomial p(std::move(field), nvars, order);
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

template <Field K>
Polynomial<K> Polynomial<K>::from_sorted_terms(K field, int nvars, MonomialOrder order, std::vector<Term> terms) {
  Polynomial p(std::move(field), nvars, order);
  p.terms_ = std::move(terms);
  return p;
}

template <Field K>
Polynomial<K> Polynomial<K>::constant(K field, int nvars, Element c) {
  return monomial(std::move(field), nvars, Monomial(), std::move(c));
}

template <Field K>
Polynomial<K> Polynomial<K>::monomial(K field, int nvars, const Monomial& m, Element c) {
  Polynomial p(std::move(field), nvars);
  if (!p.field_.is_zero(c)) p.terms_.push_back({m, std::move(c)});
  return p;
}

template <Field K>
Polynomial<K> Polynomial<K>::variable(K field, int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
  Element one = field.one();
  return monomial(std::move(field), nvars, Monomial::variable(i), std::move(one));
}

template <Field K>
void Polynomial<K>::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return order_.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff = field_.add(out.back().coeff, t.coeff);
    else
      out.push_back(std::move(t));
    if (field_.is_zero(out.back().coeff)) out.pop_back();
  }
  terms_ = std::move(out);
}

template <Field K>
int Polynomial<K>::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

template <Field K>
bool Polynomial<K>::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

template <Field K>
typename Polynomial<K>::Element Polynomial<K>::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return field_.zero();
}

template <Field K>
Polynomial<K> Polynomial<K>::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  Polynomial p(field_, nvars_, order);
  p.terms_ = terms_;
  p.canonicalize();
  return p;
}

template <Field K>
Polynomial<K> Polynomial<K>::monic() const {
  if (is_zero() || field_.is_one(leading_coeff())) return *this;
  return scaled(field_.inv(leading_coeff()));
}

template <Field K>
Polynomial<K> Polynomial<K>::scaled(const Element& c) const {
  Polynomial p(field_, nvars_, order_);
  if (field_.is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, field_.mul(t.coeff, c)});
  return p;
}

template <Field K>
Polynomial<K> Polynomial<K>::times_term(const Monomial& m, const Element& c) const {
  Polynomial p(field_, nvars_, order_);
  if (field_.is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
  return p;
}

template <Field K>
Polynomial<K> Polynomial<K>::minus_term_times(const Element& c, const Monomial& m, const Polynomial& g) const {
  Polynomial out(field_, nvars_, order_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  auto i = terms_.begin();
  auto j = g.terms_.begin();
  while (i != terms_.end() || j != g.terms_.end()) {
    if (j == g.terms_.end()) {
      out.terms_.push_back(*i++);
      continue;
    }
    Monomial mj = j->mono * m;
    int cmp = i == terms_.end() ? -1 : order_.compare(i->mono, mj);
    if (cmp > 0) {
      out.terms_.push_back(*i++);
    } else if (cmp < 0) {
      out.terms_.push_back({mj, field_.neg(field_.mul(c, j->coeff))});
      ++j;
    } else {
      Element v = field_.sub(i->coeff, field_.mul(c, j->coeff));
      if (!field_.is_zero(v)) out.terms_.push_back({mj, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <Field K>
Polynomial<K> Polynomial<K>::component(int k) const {
  Polynomial p(field_, nvars_, order_);
  for (const auto& t : terms_)
    if (t.mono.degree() == k) p.terms_.push_back(t);
  return p;
}

template <Field K>
Polynomial<K> Polynomial<K>::combine(const Polynomial& b, bool subtract) const {
  if (b.order_ != order_) return combine(b.with_order(order_), subtract);
  Element c = subtract ? field_.neg(field_.one()) : field_.one();
  return minus_term_times(field_.neg(c), Monomial(), b);
}

template <Field K>
Polynomial<K> Polynomial<K>::multiply(const Polynomial& b) const {
  std::unordered_map<Monomial, Element, MonomialHash> acc;
  acc.reserve(terms_.size() * b.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : b.terms_) {
      auto [it, fresh] = acc.try_emplace(s.mono * t.mono, field_.mul(s.coeff, t.coeff));
      if (!fresh) it->second = field_.add(it->second, field_.mul(s.coeff, t.coeff));
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!field_.is_zero(c)) terms.push_back({m, std::move(c)});
  return from_terms(field_, nvars_, std::move(terms), order_);
}

template <Field K>
std::string Polynomial<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = field_.is_negative(t.coeff);
    Element mag = negative ? field_.neg(t.coeff) : t.coeff;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    bool unit = field_.is_one(mag);
    if (t.mono.degree() == 0) {
      s += field_.to_string(mag);
    } else {
      if (!unit) s += field_.to_string(mag) + "*";
      s += t.mono.to_string(nvars_);
    }
  }
  return s;
}

template <Field K>
Polynomial<K> partial_derivative(const Polynomial<K>& f, int i) {
  if (i < 0 || i >= f.nvars()) throw std::out_of_range("variable index out of range");
  const K& k = f.field();
  std::vector<typename Polynomial<K>::Term> terms;
  for (const auto& t : f.terms()) {
    int e = t.mono[i];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(i, e - 1);
    auto c = k.mul(t.coeff, k.from_int(e));
    if (!k.is_zero(c)) terms.push_back({m, c});
  }
  return Polynomial<K>::from_terms(k, f.nvars(), std::move(terms), f.order());
}

template <Field K>
Polynomial<K> embed(const Polynomial<K>& f, int nvars, int offset, const MonomialOrder& order) {
  std::vector<typename Polynomial<K>::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono.shifted(offset);
    for (int i = nvars; i < kMaxVars; ++i)
      if (m[i] != 0) throw std::out_of_range("embedding drops a used variable");
    terms.push_back({m, t.coeff});
  }
  return Polynomial<K>::from_terms(f.field(), nvars, std::move(terms), order);
}

template <Field K>
Polynomial<K> exact_divide(const Polynomial<K>& f, const Polynomial<K>& h) {
  if (h.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const K& k = f.field();
  Polynomial<K> hh = h.with_order(f.order());
  Polynomial<K> rest = f;
  std::vector<typename Polynomial<K>::Term> quotient;
  auto lc_inv = k.inv(hh.leading_coeff());
  while (!rest.is_zero()) {
    const auto& lt = rest.leading();
    if (!hh.leading_monomial().divides(lt.mono))
      throw std::invalid_argument("polynomial is not divisible");
    Monomial q = lt.mono / hh.leading_monomial();
    auto c = k.mul(lt.coeff, lc_inv);
    quotient.push_back({q, c});
    rest = rest.minus_term_times(c, q, hh);
  }
  return Polynomial<K>::from_terms(k, f.nvars(), std::move(quotient), f.order());
}

template <Field K>
Polynomial<K> substitute(const Polynomial<K>& f, std::span<const Polynomial<K>> images) {
  if (static_cast<int>(images.size()) != f.nvars()) throw std::invalid_argument("need one image per variable");
  const K& k = f.field();
  Polynomial<K> result(k, f.nvars(), f.order());
  // powers cached per variable
  std::vector<std::vector<Polynomial<K>>> powers(images.size());
  for (const auto& t : f.terms()) {
    Polynomial<K> term = Polynomial<K>::constant(k, f.nvars(), t.coeff).with_order(f.order());
    for (int i = 0; i < f.nvars(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      auto& pw = powers[static_cast<std::size_t>(i)];
      if (pw.empty()) pw.push_back(images[static_cast<std::size_t>(i)].with_order(f.order()));
      while (static_cast<int>(pw.size()) < e) pw.push_back(pw.back() * pw.front());
      term = term * pw[static_cast<std::size_t>(e - 1)];
    }
    result = result + term;
  }
  return result;
}

#define ACI_INSTANTIATE(K)                                                                   \
  template class Polynomial<K>;                                                              \
  template Polynomial<K> partial_derivative(const Polynomial<K>&, int);                      \
  template Polynomial<K> embed(const Polynomial<K>&, int, int, const MonomialOrder&);        \
  template Polynomial<K> exact_divide(const Polynomial<K>&, const Polynomial<K>&);           \
  template Polynomial<K> substitute(const Polynomial<K>&, std::span<const Polynomial<K>>);

ACI_INSTANTIATE(PrimeField)
ACI_INSTANTIATE(RationalField)

}  // namespace aci
