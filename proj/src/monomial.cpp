#include "aci/monomial.hpp"

#include <stdexcept>

namespace aci {

Monomial::Monomial(std::initializer_list<int> exps) {
  exps_.fill(0);
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
  int i = 0;
  for (int e : exps) set(i++, e);
}

Monomial Monomial::variable(int i, int power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(int i, int e) {
  if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (e < 0 || e > 0xffff) throw std::out_of_range("exponent out of range");
  degree_ += e - exps_[static_cast<std::size_t>(i)];
  exps_[static_cast<std::size_t>(i)] = static_cast<Exponent>(e);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<Monomial::Exponent>(a.exps_[i] + b.exps_[i]);
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<Monomial::Exponent>(a.exps_[i] - b.exps_[i]);
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : exps_) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

std::string Monomial::to_string(int nvars) const {
  std::string s;
  for (int i = 0; i < nvars; ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

Monomial Monomial::shifted(int offset) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int j = i + offset;
    if (exps_[i] == 0) continue;
    if (j < 0 || j >= kMaxVars) throw std::out_of_range("shift moves a used variable out of range");
    r.set(j, exps_[i]);
  }
  return r;
}

std::string MonomialOrder::name() const {
  if (kind_ == Kind::DegRevLex) return "degrevlex";
  return "elim:" + std::to_string(block_);
}

int MonomialOrder::degrevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::DegRevLex) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  if (int c = degrevlex_range(a, b, 0, block_); c != 0) return c;
  return degrevlex_range(a, b, block_, kMaxVars);
}

namespace {

void enumerate(int nvars, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(var, e);
    enumerate(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomial_basis(int nvars, int k, const MonomialOrder& order) {
  std::vector<Monomial> out;
  if (k < 0 || nvars <= 0) return out;
  out.reserve(count_monomials(nvars, k));
  Monomial cur;
  enumerate(nvars, 0, k, cur, out);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

std::size_t count_monomials(int nvars, int k) {
  if (k < 0) return 0;
  // C(nvars-1+k, k)
  std::size_t r = 1;
  for (int i = 1; i <= nvars - 1; ++i) r = r * static_cast<std::size_t>(k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace aci
