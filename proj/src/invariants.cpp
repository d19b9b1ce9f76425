#include "aci/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "aci/ideal_ops.hpp"

namespace aci {

template <Field K>
int AciSystem<K>::degree_sum() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0);
}

template <Field K>
AciSystem<K> aci_system(std::vector<Polynomial<K>> fs) {
  if (fs.size() < 2) throw std::invalid_argument("need f_0..f_n with n >= 1");
  AciSystem<K> sys{fs[0].field(), fs[0].nvars(), {}, {}, {}, {}};
  if (static_cast<int>(fs.size()) != sys.nvars)
    throw std::invalid_argument("need exactly n + 1 = " + std::to_string(sys.nvars) + " polynomials");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& f = fs[i];
    if (f.nvars() != sys.nvars) throw std::invalid_argument("polynomials live in different rings");
    if (!f.is_homogeneous()) throw std::invalid_argument("f_" + std::to_string(i) + " is not homogeneous");
    if (f.is_zero()) throw std::invalid_argument("f_" + std::to_string(i) + " is zero");
    if (f.degree() < 1) throw std::invalid_argument("f_" + std::to_string(i) + " is a constant");
    sys.degrees.push_back(f.degree());
  }
  sys.fs = std::move(fs);
  return sys;
}

template <Field K>
AciSystem<K> jacobian_ideal(const Polynomial<K>& f, std::mt19937_64& rng) {
  if (!f.is_homogeneous() || f.degree() < 2) throw std::invalid_argument("need a form of degree >= 2");
  const int nvars = f.nvars();
  if (nvars < 2) throw std::invalid_argument("need at least two variables");
  const K& k = f.field();
  std::optional<LinearChange<K>> change;
  Polynomial<K> g = f;
  for (int attempt = 0; attempt <= 5; ++attempt) {
    if (attempt > 0) {
      change = LinearChange<K>::random(k, nvars, rng);
      g = change->apply(f);
    }
    std::vector<Polynomial<K>> partials;
    for (int i = 0; i < nvars; ++i) partials.push_back(partial_derivative(g, i));
    bool nonzero = true;
    for (int i = 1; i < nvars; ++i) nonzero = nonzero && !partials[static_cast<std::size_t>(i)].is_zero();
    if (!nonzero) continue;
    if (!is_regular_sequence(k, nvars, std::span<const Polynomial<K>>(partials).subspan(1))) continue;
    AciSystem<K> sys{k, nvars, std::move(partials), std::vector<int>(static_cast<std::size_t>(nvars), f.degree() - 1),
                     g, change};
    return sys;
  }
  throw HypothesisError("regular-sequence normalization failed");
}

template <Field K>
Polynomial<K> random_linear_form(const K& field, int nvars, std::mt19937_64& rng) {
  std::vector<typename Polynomial<K>::Term> terms;
  for (int i = 0; i < nvars; ++i) {
    typename K::Element c;
    if constexpr (std::is_same_v<K, PrimeField>) {
      std::uniform_int_distribution<std::uint32_t> u(0, field.modulus() - 1);
      c = u(rng);
    } else {
      std::uniform_int_distribution<int> u(-100, 100);
      c = field.from_int(u(rng));
    }
    terms.push_back({Monomial::variable(i), c});
  }
  return Polynomial<K>::from_terms(field, nvars, std::move(terms));
}

template <Field K>
std::vector<Polynomial<K>> sample_regular_forms(const AciSystem<K>& sys, int count, std::mt19937_64& rng) {
  std::vector<Polynomial<K>> out;
  for (int attempt = 0; attempt < 4 * count && static_cast<int>(out.size()) < count; ++attempt) {
    auto l = random_linear_form(sys.field, sys.nvars, rng);
    if (l.is_zero()) continue;
    std::vector<Polynomial<K>> gens(sys.fs.begin() + 1, sys.fs.end());
    gens.push_back(l);
    auto gb = reduced_groebner(Ideal<K>(sys.field, sys.nvars, gens));
    if (gb.is_unit() || hilbert_series(gb).pole_order == 0) out.push_back(l);
  }
  if (out.empty()) throw std::runtime_error("generic-form sampling exhausted: every trial was a zero-divisor");
  return out;
}

namespace {

template <Field K>
std::vector<LefschetzRow> generic_rows(const GradedModule<K>& module, std::span<const Polynomial<K>> forms, int from,
                                       int to) {
  std::vector<LefschetzRow> rows;
  for (int k = from; k <= to; ++k) {
    LefschetzRow row;
    row.k = k;
    row.dim_source = module.dim(k);
    row.dim_target = module.dim(k + 1);
    for (const auto& l : forms) {
      row.rank = std::max(row.rank, multiplication_map(module, l, k).rank);
      if (row.rank == std::min(row.dim_source, row.dim_target)) break;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

template <Field K>
LefschetzProfile lefschetz_profile(const AciSystem<K>& sys, const GroebnerBasis<K>& j, const GroebnerBasis<K>& i,
                                   const IntPoly& F, int st, std::span<const Polynomial<K>> forms) {
  LefschetzProfile p;
  p.top = sys.degree_sum() - sys.n() - 1;
  p.i0 = p.top / 2;
  p.trials = static_cast<int>(forms.size());
  const int m_top = std::max(st, p.top) + 1;
  GradedModule<K> n_mod(i, j, std::max(p.top, 0) + 1);
  GradedModule<K> m_mod(j, m_top + 1);
  p.rows = generic_rows(n_mod, forms, 0, std::max(p.top, 0));
  p.m_rows = generic_rows(m_mod, forms, 0, m_top);
  for (int k = 0; k <= p.top; ++k) p.n_k.push_back(n_mod.dim(k));

  p.symmetric = true;
  for (int k = 0; k <= p.top; ++k)
    if (p.n_k[static_cast<std::size_t>(k)] != p.n_k[static_cast<std::size_t>(p.top - k)]) p.symmetric = false;
  p.unimodal = true;
  for (int k = 0; k < p.top; ++k) {
    auto a = p.n_k[static_cast<std::size_t>(k)], b = p.n_k[static_cast<std::size_t>(k + 1)];
    if (k < p.i0 && a > b) p.unimodal = false;
    if (k >= p.i0 && a < b) p.unimodal = false;
  }
  p.windows_hold = true;
  for (const auto& r : p.rows) {
    if (2 * r.k < p.top && !r.injective()) p.windows_hold = false;
    if (r.k >= p.i0 && !r.surjective()) p.windows_hold = false;
  }
  p.m_injective_below = true;
  p.m_surjective_from_i0 = true;
  for (const auto& r : p.m_rows) {
    if (2 * r.k < p.top && !r.injective()) p.m_injective_below = false;
    if (r.k >= p.i0 && !r.surjective()) p.m_surjective_from_i0 = false;
  }
  p.m_surjective_predicted = p.i0 >= F.degree();
  return p;
}

template <Field K>
AssumptionA assumption_A_max_k(const AciSystem<K>& sys, const Polynomial<K>& l) {
  const int q = sys.q();
  const int d0 = sys.degrees[0];
  std::vector<Polynomial<K>> w_tilde(sys.fs.begin() + 1, sys.fs.end());
  w_tilde.push_back(l);
  auto gb = reduced_groebner(Ideal<K>(sys.field, sys.nvars, w_tilde));
  if (!gb.is_unit() && hilbert_series(gb).pole_order != 0) throw HypothesisError("l is a zero-divisor on B");
  GradedModule<K> bl(std::move(gb), q + d0 + 1);
  AssumptionA out;
  for (int k = q - 1; k >= 0; --k)
    if (multiplication_map(bl, sys.fs[0], k, d0).injective()) {
      out.max_k = k;
      break;
    }
  std::vector<Polynomial<K>> jl = sys.fs;
  jl.push_back(l);
  auto gl = reduced_groebner(Ideal<K>(sys.field, sys.nvars, jl));
  if (!gl.is_unit()) out.L = hilbert_series(gl).numerator;
  if (out.max_k) out.bound_holds = out.L.degree() <= q - *out.max_k - 1;
  return out;
}

template <Field K>
std::vector<DualityRecord> duality_checks(const AciSystem<K>& sys, const Polynomial<K>& l) {
  const int q = sys.q();
  const int d0 = sys.degrees[0];
  const int top = q + d0 + 1;
  std::vector<Polynomial<K>> w_tilde(sys.fs.begin() + 1, sys.fs.end());
  w_tilde.push_back(l);
  GradedModule<K> bl(reduced_groebner(Ideal<K>(sys.field, sys.nvars, w_tilde)), top + d0 + 1);
  GradedModule<K> m(reduced_groebner(Ideal<K>(sys.field, sys.nvars, sys.fs)), top + d0 + 1);
  const auto& f0 = sys.fs[0];
  auto f0_map = [&](int k) {
    if (k < 0) return GradedMap<K>{k, k + d0, 0, bl.dim(k + d0), {}, 0};
    return multiplication_map(bl, f0, k, d0);
  };
  auto l_map = [&](int k) {
    if (k < 0) return GradedMap<K>{k, k + 1, 0, m.dim(k + 1), {}, 0};
    return multiplication_map(m, l, k);
  };
  std::vector<DualityRecord> out;
  for (int p = 0; p <= top; ++p) {
    DualityRecord r;
    r.p = p;
    r.f0_surjective = f0_map(p - d0).surjective();
    r.f0_injective_dual = f0_map(q - p).injective();
    r.l_surjective = l_map(p - 1).surjective();
    r.f0_injective = f0_map(p).injective();
    r.l_injective_shifted = l_map(p + d0 - 1).injective();
    out.push_back(r);
  }
  return out;
}

template <Field K>
ConeCheck cone_check(const AciSystem<K>& sys) {
  const K& k = sys.field;
  ConeCheck out;
  const int deg = sys.degrees[1];
  // coefficient matrix with one column per f_i over the monomials of degree d_1
  bool equal_degrees = true;
  for (int d : sys.degrees) equal_degrees = equal_degrees && d == deg;
  if (!equal_degrees) return out;
  auto basis = monomial_basis(sys.nvars, deg);
  auto index = monomial_index(basis);
  const bool jacobian = sys.hypersurface.has_value();
  Matrix<K> m(basis.size(), sys.fs.size(), k);
  for (std::size_t i = 0; i < sys.fs.size(); ++i)
    for (const auto& t : sys.fs[i].terms()) m(index.at(t.mono), i) = t.coeff;
  auto kernel = nullspace(m, k);
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    if (!jacobian && k.is_zero(kernel(r, 0))) continue;
    out.cone = true;
    for (std::size_t c = 0; c < kernel.cols(); ++c) out.witness.push_back(k.to_string(kernel(r, c)));
    break;
  }
  return out;
}

template <Field K>
InvariantReport analyze(const AciSystem<K>& sys, const AnalyzeOptions& options) {
  const K& k = sys.field;
  const int n = sys.n();
  InvariantReport rep;
  rep.n = n;
  rep.degrees = sys.degrees;
  if (sys.hypersurface) rep.d = sys.hypersurface->degree();
  if (sys.change) rep.linear_change = sys.change->to_string();

  if (!is_regular_sequence(k, sys.nvars, sys.regular_part())) throw HypothesisError("f_1..f_n is not a regular sequence");
  auto gj = reduced_groebner(Ideal<K>(k, sys.nvars, sys.fs));
  if (gj.is_unit()) throw HypothesisError("J is the unit ideal");
  auto hj = hilbert_series(gj);
  if (hj.pole_order != 1) throw HypothesisError("dim S/J = " + std::to_string(hj.pole_order) + ", expected 1");
  auto gi = saturate_irrelevant(gj.ideal());
  auto hi = hilbert_series(gi);
  rep.G = hj.numerator;
  rep.F = hi.numerator;
  rep.tau = rep.G.at_one();
  rep.st = rep.G.degree();
  rep.deg_F = rep.F.degree();
  if (hi.pole_order != 1 || rep.F.at_one() != rep.tau)
    throw IdentityMismatch("G(1) = " + std::to_string(rep.tau) + " but F(1) = " + std::to_string(rep.F.at_one()));

  auto predicted = theorem_main_prediction(sys.degrees, rep.F);
  if (predicted != rep.G)
    throw IdentityMismatch("computed G = " + rep.G.to_list() + " but the formula gives " + predicted.to_list());

  const int s = sys.s();
  const int d0 = sys.degrees[0];
  if (rep.deg_F > s + 1 || rep.st > s + 1 + d0) throw IdentityMismatch("degree bounds on F or G violated");
  const int u = std::max(rep.st, rep.deg_F);
  if (ideal_piece_rows(gj, u).rows() != ideal_piece_rows(gi, u).rows())
    throw IdentityMismatch("J and I differ in degree " + std::to_string(u));

  rep.relation_degree = relation_min_degree(std::span<const Polynomial<K>>(sys.fs), d0);
  if (rep.relation_degree != sys.degree_sum() - n - rep.deg_F)
    throw IdentityMismatch("first relation in degree " + std::to_string(rep.relation_degree) + ", formula gives " +
                           std::to_string(sys.degree_sum() - n - rep.deg_F));
  if (rep.d) {
    const int d = *rep.d;
    rep.ct = (n + 1) * (d - 2) - rep.deg_F;
    rep.mdr = rep.relation_degree - (d - 1);
    if (*rep.ct != rep.mdr + d - 2) throw IdentityMismatch("ct != mdr + d - 2");
  } else {
    rep.mdr = rep.relation_degree;
  }

  auto gens = minimal_generator_degrees(gi);
  if (static_cast<int>(gens.size()) == n) {
    rep.ci_type = gens;
    if (complete_intersection_numerator(gens) != rep.F) throw IdentityMismatch("F differs from the CI numerator");
    std::vector<int> ds(sys.degrees.begin() + 1, sys.degrees.end());
    std::sort(ds.begin(), ds.end());
    for (int j = 0; j < n; ++j)
      if (gens[static_cast<std::size_t>(j)] > ds[static_cast<std::size_t>(j)])
        throw IdentityMismatch("CI degree a_j exceeds d_j");
    if (d0 < gens[0]) throw IdentityMismatch("d_0 < a_1");
    if (d0 > gens[0] || (n >= 2 && d0 == gens[0] && gens[1] == gens[0])) {
      if (rep.st != sys.degree_sum() - n - gens[0]) throw IdentityMismatch("deg G differs from sum d_i - n - a_1");
    }
    if (rep.d) {
      const int p = rep.st;
      for (int e = p; e <= p + 1; ++e)
        if (ideal_piece_rows(gj, e).rows() != ideal_piece_rows(gi, e).rows())
          throw IdentityMismatch("J_p != I_p at p = " + std::to_string(e));
    }
  }
  rep.saturated_equals_jacobian = gi == gj;

  auto cone = cone_check(sys);
  rep.cone = cone.cone;
  rep.cone_witness = cone.witness;

  std::mt19937_64 rng(options.seed);
  auto forms = sample_regular_forms(sys, options.trials, rng);
  if (options.lefschetz)
    rep.lefschetz = lefschetz_profile(sys, gj, gi, rep.F, rep.st, std::span<const Polynomial<K>>(forms));
  auto a = assumption_A_max_k(sys, forms.front());
  if (!a.bound_holds) throw IdentityMismatch("deg L exceeds q - k - 1");
  rep.assumption_A_max_k = a.max_k;

  rep.c1.slack = rep.st - rep.deg_F;
  rep.c1.holds = rep.c1.slack >= 0;
  if (options.alpha && rep.d) {
    RationalVerdict v;
    v.slack = mpq_class(rep.mdr) - mpq_class(*rep.d) * *options.alpha + mpq_class(n);
    v.holds = sgn(v.slack) >= 0;
    rep.c2 = v;
  }
  return rep;
}

template <Field K>
bool has_lefschetz_element(const K& field, int nvars, std::span<const Polynomial<K>> fs, int trials,
                           std::mt19937_64& rng) {
  auto gb = reduced_groebner(Ideal<K>(field, nvars, std::vector<Polynomial<K>>(fs.begin(), fs.end())));
  if (gb.is_unit()) return true;
  if (hilbert_series(gb).pole_order != 0) throw HypothesisError("quotient is not Artinian");
  const int socle = hilbert_series(gb).numerator.degree();
  GradedModule<K> a(std::move(gb), socle + 1);
  for (int t = 0; t < trials; ++t) {
    auto l = random_linear_form(field, nvars, rng);
    bool ok = true;
    for (int k = 0; k <= socle && ok; ++k) {
      auto map = multiplication_map(a, l, k);
      ok = map.rank == std::min(map.source_dim, map.target_dim);
    }
    if (ok) return true;
  }
  return false;
}

template <Field K>
bool n1_lefschetz_holds(const AciSystem<K>& sys, int trials, std::mt19937_64& rng) {
  if (sys.n() != 1) throw std::invalid_argument("needs n = 1");
  const int d0 = sys.degrees[0], d1 = sys.degrees[1];
  if (d0 >= d1) throw std::invalid_argument("needs d_0 < d_1");
  auto gj = reduced_groebner(Ideal<K>(sys.field, sys.nvars, sys.fs));
  const int g_top = gj.is_unit() ? 0 : hilbert_series(gj).numerator.degree();
  const int top = std::max(g_top, d1 + d0) + 2;
  GradedModule<K> m(gj, top + d0 + 1);
  for (const auto& l : sample_regular_forms(sys, trials, rng)) {
    GradedModule<K> bl(reduced_groebner(Ideal<K>(sys.field, sys.nvars, {sys.fs[1], l})), top + d0 + 1);
    bool ok = true;
    for (int r = 0; r <= top && ok; ++r) {
      if (r <= d1 - d0 - 1 || r > d1 - 1) {
        ok = multiplication_map(bl, sys.fs[0], r).injective();
        if (ok && r + d0 - 1 >= 0) ok = multiplication_map(m, l, r + d0 - 1).injective();
      }
    }
    for (int p = d0; p <= top && ok; ++p) {
      ok = multiplication_map(bl, sys.fs[0], p - d0).surjective() && multiplication_map(m, l, p - 1).surjective();
    }
    for (int k = 0; k < top && ok; ++k) {
      auto map = multiplication_map(m, l, k);
      ok = map.rank == std::min(map.source_dim, map.target_dim);
    }
    if (ok) return true;
  }
  return false;
}

#define ACI_INSTANTIATE(K)                                                                                   \
  template struct AciSystem<K>;                                                                              \
  template AciSystem<K> aci_system(std::vector<Polynomial<K>>);                                              \
  template AciSystem<K> jacobian_ideal(const Polynomial<K>&, std::mt19937_64&);                              \
  template Polynomial<K> random_linear_form(const K&, int, std::mt19937_64&);                                \
  template std::vector<Polynomial<K>> sample_regular_forms(const AciSystem<K>&, int, std::mt19937_64&);      \
  template LefschetzProfile lefschetz_profile(const AciSystem<K>&, const GroebnerBasis<K>&,                   \
                                              const GroebnerBasis<K>&, const IntPoly&, int,                  \
                                              std::span<const Polynomial<K>>);                               \
  template AssumptionA assumption_A_max_k(const AciSystem<K>&, const Polynomial<K>&);                        \
  template std::vector<DualityRecord> duality_checks(const AciSystem<K>&, const Polynomial<K>&);             \
  template ConeCheck cone_check(const AciSystem<K>&);                                                        \
  template InvariantReport analyze(const AciSystem<K>&, const AnalyzeOptions&);                              \
  template bool has_lefschetz_element(const K&, int, std::span<const Polynomial<K>>, int, std::mt19937_64&); \
  template bool n1_lefschetz_holds(const AciSystem<K>&, int, std::mt19937_64&);

ACI_INSTANTIATE(PrimeField)
ACI_INSTANTIATE(RationalField)

}  // namespace aci
