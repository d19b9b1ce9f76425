#include "aci/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "aci/hilbert.hpp"
#include "aci/ideal_ops.hpp"
#include "aci/parse.hpp"

namespace aci {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

template <Field K>
Polynomial<K> var_power(const K& field, int nvars, int i, int e) {
  return Polynomial<K>::monomial(field, nvars, Monomial::variable(i, e), field.one());
}

template <Field K>
Polynomial<K> power(const Polynomial<K>& f, int e) {
  auto out = Polynomial<K>::constant(f.field(), f.nvars(), f.field().one());
  for (int i = 0; i < e; ++i) out = out * f;
  return out;
}

/// Integer linear form vanishing at the integer point p.
template <Field K>
Polynomial<K> form_through(const K& field, const std::vector<int>& p, std::mt19937_64& rng) {
  const int nvars = static_cast<int>(p.size());
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::size_t j = 0;
  while (p[j] == 0) ++j;
  for (;;) {
    std::vector<std::int64_t> a(p.size(), 0);
    std::int64_t dot = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (i != j) {
        a[i] = coeff(rng);
        dot += a[i] * p[i];
      }
    std::vector<typename Polynomial<K>::Term> terms;
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::int64_t c = i == j ? -dot : a[i] * p[j];
      if (c != 0) terms.push_back({Monomial::variable(static_cast<int>(i)), field.from_int(c)});
    }
    auto l = Polynomial<K>::from_terms(field, nvars, std::move(terms));
    if (!l.is_zero()) return l;
  }
}

template <Field K>
bool dimension_one(const K& field, int nvars, const std::vector<Polynomial<K>>& fs) {
  auto gb = reduced_groebner(Ideal<K>(field, nvars, fs));
  return !gb.is_unit() && hilbert_series(gb).pole_order == 1;
}

template <Field K>
std::vector<Polynomial<K>> jacobian_of(const Polynomial<K>& f) {
  std::vector<Polynomial<K>> out;
  for (int i = 0; i < f.nvars(); ++i) out.push_back(partial_derivative(f, i));
  return out;
}

}  // namespace

template <Field K>
Polynomial<K> random_form(const K& field, int nvars, int degree, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<typename Polynomial<K>::Term> terms;
  for (const auto& m : monomial_basis(nvars, degree)) terms.push_back({m, field.from_int(coeff(rng))});
  return Polynomial<K>::from_terms(field, nvars, std::move(terms));
}

template <Field K>
FamilyInstance<K> e1_family(const K& field, int n, const std::vector<int>& b, const std::vector<int>& c,
                            bool plus_sign) {
  if (n < 1 || n + 1 > kMaxVars - 1) throw std::invalid_argument("e1: n out of range");
  if (static_cast<int>(b.size()) != n || static_cast<int>(c.size()) != n)
    throw std::invalid_argument("e1: need n values of b and of c");
  const int d = b[0] * c[0];
  for (int j = 0; j < n; ++j) {
    if (b[j] < 1 || c[j] < 2) throw std::invalid_argument("e1: need b_j >= 1 and c_j >= 2");
    if (b[j] * c[j] != d) throw std::invalid_argument("e1: b_j * c_j must be the same for all j");
  }
  const int nvars = n + 1;
  auto f = Polynomial<K>(field, nvars);
  for (int j = 0; j < n; ++j) {
    auto x0 = var_power(field, nvars, 0, b[j]);
    auto xj = var_power(field, nvars, j + 1, b[j]);
    f = f + power(plus_sign ? x0 + xj : x0 - xj, c[j]);
  }
  FamilyInstance<K> inst;
  inst.name = "e1";
  inst.params = "n=" + std::to_string(n) + " b=" + join(b) + " c=" + join(c) + " sign=" + (plus_sign ? "+" : "-");
  inst.f = f;
  Prediction& p = inst.predicted;
  std::int64_t tau = 1;
  int sum_b = 0, min_a = d;
  std::vector<int> a;
  mpq_class alpha = 0;
  for (int j = 0; j < n; ++j) {
    tau *= d - b[j];
    sum_b += b[j];
    min_a = std::min(min_a, d - b[j]);
    a.push_back(d - b[j]);
    alpha += mpq_class(1, c[j]);
  }
  std::sort(a.begin(), a.end());
  p.tau = tau;
  p.ct = sum_b - n + d - 2;
  p.st = (n + 1) * (d - 2) + 1 - min_a;
  p.mdr = sum_b - n;
  p.ci_type = a;
  alpha.canonicalize();
  p.alpha = alpha;
  p.cone = std::all_of(b.begin(), b.end(), [](int v) { return v == 1; });
  if (std::all_of(c.begin(), c.end(), [](int v) { return v == 2; }) &&
      std::all_of(b.begin(), b.end(), [&](int v) { return v == b[0]; }))
    p.notes.push_back(std::string("nodal: Alexander polynomial t ") + (n % 2 == 1 ? "+" : "-") + " 1");
  return inst;
}

template <Field K>
FamilyInstance<K> rkl0_curve(const K& field, int p, int q, int d) {
  if (p <= 0 || q <= 0 || p + q != d) throw std::invalid_argument("rkl0: need p, q > 0 and p + q = d");
  FamilyInstance<K> inst;
  inst.name = "rkl0";
  inst.params = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " d=" + std::to_string(d);
  Monomial m;
  m.set(0, p);
  m.set(1, q);
  inst.f = Polynomial<K>::monomial(field, 3, m, field.one()) + var_power(field, 3, 2, d);
  inst.predicted.ct = d - 1;
  inst.predicted.mdr = 1;
  const int i0 = (3 * d - 6) / 2;
  inst.predicted.m_surjective_from_i0 = d - 1 >= 3 * (d - 2) - i0;
  return inst;
}

template <Field K>
std::vector<FamilyInstance<K>> free_divisor_examples(const K& field) {
  std::vector<FamilyInstance<K>> out;
  for (int e : {2, 3}) {
    auto x = [&](int i) { return var_power(field, 3, i, e); };
    FamilyInstance<K> inst;
    inst.name = "free";
    inst.params = "e=" + std::to_string(e);
    inst.f = (x(0) - x(1)) * (x(1) - x(2)) * (x(0) - x(2));
    inst.predicted.saturated_equals_jacobian = true;
    out.push_back(std::move(inst));
  }
  return out;
}

template <Field K>
FamilyInstance<K> n1_example(const K& field, int d1) {
  if (d1 < 3) throw std::invalid_argument("n1 example: need d_1 > 2");
  FamilyInstance<K> inst;
  inst.name = "n1";
  inst.params = "d1=" + std::to_string(d1);
  inst.fs = {parse_polynomial("x0*x1", field, 2), var_power(field, 2, 1, d1)};
  return inst;
}

template <Field K>
FamilyInstance<K> three_point_curve(const K& field, int d, bool collinear) {
  FamilyInstance<K> inst;
  inst.name = "three-point";
  inst.params = "d=" + std::to_string(d) + (collinear ? " collinear" : " general");
  const char* text = nullptr;
  if (collinear && d == 4) {
    // a line times a smooth cubic meeting it in three points: three collinear nodes
    text = "x0^3*x2 - x0*x1^2*x2 + x2^4 + x1^2*x2^2";
  } else if (collinear && d == 5) {
    // one tacnode: a length-3 scheme on its tangent line
    text = "x1^2*x2^3 - x0^4*x2 + x0^5 + x1^5";
    inst.predicted.notes.push_back("singular scheme of type (1,3) from a tacnode; three collinear nodes cannot occur for d = 5");
  } else if (!collinear && d == 3) {
    text = "x0*x1*x2";
  } else if (!collinear && d == 4) {
    // nodes at the three coordinate points
    text = "x0^2*x1^2 + 2*x1^2*x2^2 + 3*x0^2*x2^2 + x0^2*x1*x2 + x0*x1^2*x2 + x0*x1*x2^2";
  } else {
    throw std::invalid_argument("three-point curves exist here for d = 4, 5 (collinear) or 3, 4 (general)");
  }
  inst.f = parse_polynomial(text, field, 3);
  inst.predicted.tau = 3;
  if (collinear) {
    inst.predicted.ci_type = std::vector<int>{1, 3};
    inst.predicted.st = 3 * d - 6;
  }
  return inst;
}

template <Field K>
std::vector<Polynomial<K>> random_aci(const K& field, int n, int max_degree, std::mt19937_64& rng) {
  if (n < 1 || n + 1 > kMaxVars - 1 || max_degree < 2) throw std::invalid_argument("random_aci: bad parameters");
  const int nvars = n + 1;
  std::uniform_int_distribution<int> deg(2, max_degree), coord(-3, 3), coin(0, 2);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> degrees(static_cast<std::size_t>(nvars));
    for (auto& d : degrees) d = deg(rng);
    const int room = *std::min_element(degrees.begin(), degrees.end());
    std::uniform_int_distribution<int> npoints(1, std::min(room, 3));
    const int r = npoints(rng);
    std::vector<std::vector<int>> points;
    std::vector<int> mult;
    int used = 0;
    for (int s = 0; s < r; ++s) {
      std::vector<int> p(static_cast<std::size_t>(nvars));
      do
        for (auto& x : p) x = coord(rng);
      while (std::all_of(p.begin(), p.end(), [](int x) { return x == 0; }));
      int m = used + 2 + (r - s - 1) <= room && coin(rng) == 0 ? 2 : 1;
      used += m;
      points.push_back(p);
      mult.push_back(m);
    }
    std::vector<Polynomial<K>> fs;
    for (int i = 0; i < nvars; ++i) {
      const int d = degrees[static_cast<std::size_t>(i)];
      auto f = Polynomial<K>(field, nvars);
      for (int t = 0; t < 3; ++t) {
        auto term = random_form(field, nvars, d - used, rng, 5);
        for (int s = 0; s < r; ++s) term = term * power(form_through(field, points[static_cast<std::size_t>(s)], rng), mult[static_cast<std::size_t>(s)]);
        f = f + term;
      }
      fs.push_back(f);
    }
    bool nonzero = std::all_of(fs.begin(), fs.end(), [](const Polynomial<K>& f) { return !f.is_zero(); });
    if (!nonzero) continue;
    if (!is_regular_sequence(field, nvars, std::span<const Polynomial<K>>(fs).subspan(1))) continue;
    if (!dimension_one(field, nvars, fs)) continue;
    return fs;
  }
  throw std::runtime_error("random_aci: retry budget exhausted");
}

template <Field K>
Polynomial<K> random_singular_curve(const K& field, int d, std::mt19937_64& rng) {
  if (d < 2) throw std::invalid_argument("random curve: need d >= 2");
  std::uniform_int_distribution<int> coord(-3, 3), coin(0, 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    // random composition of d into at least two parts
    std::vector<int> parts;
    int left = d;
    while (left > 0) {
      std::uniform_int_distribution<int> part(1, std::max(1, std::min(left, d - 1)));
      int e = part(rng);
      parts.push_back(e);
      left -= e;
    }
    if (parts.size() < 2) continue;
    std::sort(parts.begin(), parts.end());
    auto f = Polynomial<K>::constant(field, 3, field.one());
    std::size_t i = 0;
    // with three lines available, sometimes make them concurrent
    if (parts.size() >= 3 && parts[2] == 1 && coin(rng) == 1) {
      std::vector<int> p{coord(rng), coord(rng), 1};
      for (; i < 3; ++i) f = f * form_through(field, p, rng);
    }
    for (; i < parts.size(); ++i) f = f * random_form(field, 3, parts[i], rng, 5);
    if (f.is_zero()) continue;
    if (!dimension_one(field, 3, jacobian_of(f))) continue;
    return f;
  }
  throw std::runtime_error("random curve: retry budget exhausted");
}

template <Field K>
std::vector<Polynomial<K>> random_artinian_ci(const K& field, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Polynomial<K>> fs;
    for (int i = 0; i < 3; ++i) fs.push_back(random_form(field, 3, deg(rng), rng));
    auto gb = reduced_groebner(Ideal<K>(field, 3, fs));
    if (gb.is_unit() || hilbert_series(gb).pole_order != 0) continue;
    if (fs[0].is_zero() || fs[1].is_zero() || fs[2].is_zero()) continue;
    return fs;
  }
  throw std::runtime_error("random Artinian CI: retry budget exhausted");
}

template <Field K>
std::vector<Polynomial<K>> random_height_one_pair(const K& field, int max_degree, std::mt19937_64& rng) {
  if (max_degree < 3) throw std::invalid_argument("height-one pair: need max degree >= 3");
  std::uniform_int_distribution<int> d1_dist(3, max_degree);
  for (int attempt = 0; attempt < 200; ++attempt) {
    const int d1 = d1_dist(rng);
    std::uniform_int_distribution<int> d0_dist(2, d1 - 1);
    const int d0 = d0_dist(rng);
    std::uniform_int_distribution<int> e_dist(1, d0 - 1);
    const int e = e_dist(rng);
    auto h = random_form(field, 2, e, rng);
    auto f0 = h * random_form(field, 2, d0 - e, rng);
    auto f1 = h * random_form(field, 2, d1 - e, rng);
    if (f0.is_zero() || f1.is_zero()) continue;
    std::vector<Polynomial<K>> fs{f0, f1};
    if (!dimension_one(field, 2, fs)) continue;
    return fs;
  }
  throw std::runtime_error("height-one pair: retry budget exhausted");
}

template <Field K>
FamilyInstance<K> make_family(const K& field, const FamilyArgs& a) {
  if (a.name == "e1") {
    const int n = a.n > 0 ? a.n : static_cast<int>(a.b.size());
    return e1_family(field, n, a.b, a.c, a.plus_sign);
  }
  if (a.name == "rkl0") return rkl0_curve(field, a.p, a.q, a.d);
  if (a.name == "free") {
    for (auto& inst : free_divisor_examples(field))
      if (inst.params == "e=" + std::to_string(a.e)) return inst;
    throw std::invalid_argument("free: e must be 2 or 3");
  }
  if (a.name == "n1") return n1_example(field, a.d1);
  if (a.name == "three-point") return three_point_curve(field, a.d, a.collinear);
  throw std::invalid_argument("unknown family '" + a.name + "' (e1, rkl0, free, n1, three-point)");
}

std::vector<std::string> prediction_mismatches(const Prediction& p, const InvariantReport& r) {
  std::vector<std::string> out;
  auto check = [&](const char* what, auto predicted, auto computed) {
    if (predicted != computed)
      out.push_back(std::string(what) + ": predicted " + std::to_string(predicted) + ", computed " +
                    std::to_string(computed));
  };
  if (p.tau) check("tau", *p.tau, r.tau);
  if (p.st) check("st", *p.st, r.st);
  if (p.mdr) check("mdr", *p.mdr, r.mdr);
  if (p.ct) {
    if (!r.ct)
      out.push_back("ct: predicted " + std::to_string(*p.ct) + ", not a Jacobian input");
    else
      check("ct", *p.ct, *r.ct);
  }
  if (p.ci_type && (!r.ci_type || *r.ci_type != *p.ci_type)) {
    auto list = [](const std::vector<int>& v) { return "{" + join(v) + "}"; };
    out.push_back("ci_type: predicted " + list(*p.ci_type) + ", computed " + (r.ci_type ? list(*r.ci_type) : "none"));
  }
  if (p.saturated_equals_jacobian) check("sat == J", *p.saturated_equals_jacobian, r.saturated_equals_jacobian);
  if (p.m_surjective_from_i0) {
    if (!r.lefschetz)
      out.push_back("M-surjectivity from i0: no profile computed");
    else
      check("M-surjectivity from i0", *p.m_surjective_from_i0, r.lefschetz->m_surjective_from_i0);
  }
  if (p.cone) check("cone", *p.cone, r.cone);
  return out;
}

#define ACI_INSTANTIATE(K)                                                                                         \
  template Polynomial<K> random_form(const K&, int, int, std::mt19937_64&, int);                                   \
  template FamilyInstance<K> e1_family(const K&, int, const std::vector<int>&, const std::vector<int>&, bool);      \
  template FamilyInstance<K> rkl0_curve(const K&, int, int, int);                                                  \
  template std::vector<FamilyInstance<K>> free_divisor_examples(const K&);                                         \
  template FamilyInstance<K> n1_example(const K&, int);                                                            \
  template FamilyInstance<K> three_point_curve(const K&, int, bool);                                               \
  template std::vector<Polynomial<K>> random_aci(const K&, int, int, std::mt19937_64&);                            \
  template Polynomial<K> random_singular_curve(const K&, int, std::mt19937_64&);                                   \
  template std::vector<Polynomial<K>> random_artinian_ci(const K&, int, std::mt19937_64&);                         \
  template std::vector<Polynomial<K>> random_height_one_pair(const K&, int, std::mt19937_64&);             \
  template FamilyInstance<K> make_family(const K&, const FamilyArgs&);

ACI_INSTANTIATE(PrimeField)
ACI_INSTANTIATE(RationalField)

}  // namespace aci
