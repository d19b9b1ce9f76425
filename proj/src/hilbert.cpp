#include "aci/hilbert.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace aci {

IntPoly IntPoly::monomial(int degree, std::int64_t coeff) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = coeff;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::geometric(int e) {
  if (e < 1) throw HilbertError("geometric sum needs e >= 1");
  return IntPoly(std::vector<std::int64_t>(static_cast<std::size_t>(e), 1));
}

std::int64_t IntPoly::at_one() const { return std::accumulate(c_.begin(), c_.end(), std::int64_t{0}); }

IntPoly IntPoly::shifted(int k) const {
  if (is_zero()) return {};
  if (k < 0) throw HilbertError("negative shift");
  std::vector<std::int64_t> c(static_cast<std::size_t>(k), 0);
  c.insert(c.end(), c_.begin(), c_.end());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::reversed() const {
  return IntPoly(std::vector<std::int64_t>(c_.rbegin(), c_.rend()));
}

IntPoly IntPoly::divided_by_one_minus_t() const {
  // P = (1 - t) Q  =>  q_i = q_{i-1} + p_i
  if (is_zero()) return {};
  std::vector<std::int64_t> q(c_.size() - 1);
  std::int64_t run = 0;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
    run += c_[i];
    q[i] = run;
  }
  if (run + c_.back() != 0) throw HilbertError("(1 - t) does not divide " + to_string());
  return IntPoly(std::move(q));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t v = c_[i];
    if (v == 0) continue;
    std::int64_t mag = v < 0 ? -v : v;
    if (s.empty())
      s += v < 0 ? "-" : "";
    else
      s += v < 0 ? " - " : " + ";
    if (i == 0 || mag != 1) s += std::to_string(mag);
    if (i >= 1) s += "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

std::string IntPoly::to_list() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
  return s + "]";
}

HilbertSeries normalize(IntPoly numerator, int pole_order) {
  if (numerator.is_zero()) throw HilbertError("zero Hilbert numerator (unit ideal)");
  while (pole_order > 0 && numerator.at_one() == 0) {
    numerator = numerator.divided_by_one_minus_t();
    --pole_order;
  }
  return {std::move(numerator), pole_order};
}

namespace {

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  gens = std::move(out);
}

IntPoly numerator_rec(std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return IntPoly{1};
  if (gens.front().degree() == 0) return {};

  // count occurrences per variable; pairwise coprime iff no variable is shared
  std::array<int, kMaxVars> uses{};
  for (const auto& m : gens)
    for (int v = 0; v < kMaxVars; ++v)
      if (m[v] > 0) ++uses[static_cast<std::size_t>(v)];
  int pivot_var = static_cast<int>(std::max_element(uses.begin(), uses.end()) - uses.begin());
  if (uses[static_cast<std::size_t>(pivot_var)] <= 1) {
    IntPoly p{1};
    for (const auto& m : gens) p = p * (IntPoly{1} - IntPoly::monomial(m.degree()));
    return p;
  }

  std::vector<int> exps;
  // exponents from mixed generators only, so the pivot is not already in the ideal
  for (const auto& m : gens)
    if (m[pivot_var] > 0 && m[pivot_var] != m.degree()) exps.push_back(m[pivot_var]);
  std::nth_element(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(exps.size() / 2), exps.end());
  int e = exps[exps.size() / 2];
  Monomial pivot = Monomial::variable(pivot_var, e);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& m : gens) colon.push_back(m / gcd(m, pivot));

  return numerator_rec(std::move(with_pivot)) + numerator_rec(std::move(colon)).shifted(e);
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

IntPoly hilbert_numerator_of_monomials(std::vector<Monomial> generators) {
  return numerator_rec(std::move(generators));
}

HilbertSeries hilbert_series_of_monomials(std::vector<Monomial> generators, int nvars) {
  return normalize(numerator_rec(std::move(generators)), nvars);
}

std::int64_t hilbert_function(const HilbertSeries& h, int k) {
  if (k < 0) return 0;
  const int n = h.pole_order;
  if (n == 0) return h.numerator[k];
  std::int64_t total = 0;
  for (int i = 0; i <= std::min(k, h.numerator.degree()); ++i)
    total += h.numerator[i] * binomial(k - i + n - 1, n - 1);
  return total;
}

std::int64_t multiplicity(const HilbertSeries& h) {
  if (h.pole_order != 1) throw HilbertError("multiplicity needs a dimension-one series");
  return h.numerator.at_one();
}

int stability_degree(const HilbertSeries& h) {
  if (h.pole_order != 1) throw HilbertError("stability degree needs a dimension-one series");
  return h.numerator.degree();
}

IntPoly complete_intersection_numerator(std::span<const int> degrees) {
  IntPoly p{1};
  for (int e : degrees) p = p * IntPoly::geometric(e);
  return p;
}

IntPoly theorem_main_prediction(std::span<const int> degrees, const IntPoly& F) {
  if (degrees.size() < 2) throw HilbertError("need degrees d_0..d_n with n >= 1");
  for (int d : degrees)
    if (d < 1) throw HilbertError("degrees must be positive");
  if (F.at_one() == 0) throw HilbertError("F(1) must be nonzero");
  const int n = static_cast<int>(degrees.size()) - 1;
  const int sum = std::accumulate(degrees.begin(), degrees.end(), 0);
  const int shift = sum - n - F.degree();
  if (shift < 0) throw HilbertError("inconsistent degree data: deg F exceeds sum d_i - n");
  IntPoly e = complete_intersection_numerator(degrees.subspan(1));
  return (IntPoly{1} - IntPoly::monomial(degrees[0])) * e + F.reversed().shifted(shift);
}

HilbertSeries ci_case_prediction(int n, int d, std::span<const int> a) {
  if (n < 1 || static_cast<int>(a.size()) != n) throw HilbertError("need exactly n CI degrees");
  int sum_a = 0;
  for (int aj : a) {
    if (aj < 1 || aj > d - 1) throw HilbertError("CI degrees must lie in [1, d-1]");
    sum_a += aj;
  }
  IntPoly base{1};
  IntPoly one_minus = IntPoly{1} - IntPoly::monomial(d - 1);
  for (int i = 0; i <= n; ++i) base = base * one_minus;
  IntPoly ci{1};
  for (int aj : a) ci = ci * (IntPoly{1} - IntPoly::monomial(aj));
  return normalize(base + ci.shifted((n + 1) * (d - 1) - sum_a), n + 1);
}

}  // namespace aci
