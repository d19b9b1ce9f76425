#include "aci/suites.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "aci/ideal_ops.hpp"
#include "aci/parse.hpp"

namespace aci {

std::size_t SuiteResult::passed() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const InstanceResult& r) { return r.pass; }));
}

std::size_t SuiteResult::findings() const {
  std::size_t total = 0;
  for (const auto& r : instances) total += r.findings.size();
  return total;
}

bool SuiteResult::ok() const { return !mandatory || passed() == instances.size(); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem-main", "lemma-big",      "cayley-bacharach", "lefschetz-n2",
                                              "duality-p1",   "hmnw",           "n1-lefschetz",     "conjecture-c1",
                                              "conjecture-c2-e1", "comput-ci"};
  return names;
}

template <Field K>
std::vector<Polynomial<K>> corpus_aci(const K& field, int n, int max_degree, std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(max_degree),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  return random_aci(field, n, max_degree, rng);
}

template <Field K>
Polynomial<K> corpus_curve(const K& field, std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x63757276u,
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> deg(3, 6);
  return random_singular_curve(field, deg(rng), rng);
}

namespace {

template <Field K>
std::vector<std::string> texts(const std::vector<Polynomial<K>>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

std::string list(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

using Task = std::function<InstanceResult()>;

/// Runs body on a fresh result; any exception becomes a failure.
InstanceResult guarded(const std::function<void(InstanceResult&)>& body) {
  InstanceResult r;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("error: ") + e.what());
  }
  r.pass = r.failures.empty();
  return r;
}

void expect(InstanceResult& r, bool ok, const std::string& what) {
  if (!ok) r.failures.push_back(what);
}

/// G and F straight from Groebner bases, with no identity checks.
template <Field K>
struct Numerators {
  GroebnerBasis<K> gj, gi;
  IntPoly G, F;
};

template <Field K>
Numerators<K> numerators(const AciSystem<K>& sys) {
  if (!is_regular_sequence(sys.field, sys.nvars, sys.regular_part()))
    throw HypothesisError("f_1..f_n is not a regular sequence");
  auto gj = reduced_groebner(Ideal<K>(sys.field, sys.nvars, sys.fs));
  auto hj = hilbert_series(gj);
  if (hj.pole_order != 1) throw HypothesisError("dim S/J != 1");
  auto gi = saturate_irrelevant(gj.ideal());
  auto F = hilbert_series(gi).numerator;
  return {std::move(gj), std::move(gi), hj.numerator, std::move(F)};
}

template <Field K>
struct Named {
  std::string label;
  FamilyInstance<K> inst;
};

template <Field K>
AciSystem<K> system_of(const FamilyInstance<K>& inst, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return inst.f ? jacobian_ideal(*inst.f, rng) : aci_system(inst.fs);
}

template <Field K>
std::vector<std::string> family_input(const FamilyInstance<K>& inst) {
  return inst.f ? std::vector<std::string>{inst.f->to_string()} : texts(inst.fs);
}

template <Field K>
std::vector<FamilyInstance<K>> e1_corpus(const K& field) {
  std::vector<FamilyInstance<K>> out;
  out.push_back(e1_family(field, 2, {2, 2}, {2, 2}));
  out.push_back(e1_family(field, 2, {1, 2}, {4, 2}));
  out.push_back(e1_family(field, 2, {1, 1}, {6, 6}));
  out.push_back(e1_family(field, 3, {1, 1, 1}, {3, 3, 3}));
  out.push_back(e1_family(field, 2, {2, 2}, {2, 2}, true));
  out.push_back(e1_family(field, 2, {1, 1}, {4, 4}));
  out.push_back(e1_family(field, 2, {2, 3}, {3, 2}));
  out.push_back(e1_family(field, 2, {1, 3}, {6, 2}));
  out.push_back(e1_family(field, 2, {3, 3}, {2, 2}));
  out.push_back(e1_family(field, 3, {2, 2, 2}, {2, 2, 2}));
  return out;
}

template <Field K>
std::vector<FamilyInstance<K>> curve_families(const K& field) {
  std::vector<FamilyInstance<K>> out;
  out.push_back(e1_family(field, 2, {2, 2}, {2, 2}));
  out.push_back(rkl0_curve(field, 2, 3, 5));
  out.push_back(rkl0_curve(field, 1, 3, 4));
  out.push_back(rkl0_curve(field, 2, 2, 4));
  for (auto& f : free_divisor_examples(field)) out.push_back(std::move(f));
  out.push_back(three_point_curve(field, 4, true));
  out.push_back(three_point_curve(field, 4, false));
  return out;
}

template <Field K>
Task theorem_main_task(const K& field, int n, int maxdeg, std::uint64_t seed, std::size_t i) {
  return [=] {
    return guarded([&](InstanceResult& r) {
      auto fs = corpus_aci(field, n, maxdeg, seed, i);
      r.input = texts(fs);
      auto sys = aci_system(fs);
      auto nums = numerators(sys);
      auto predicted = theorem_main_prediction(sys.degrees, nums.F);
      r.summary = "G=" + nums.G.to_list() + " F=" + nums.F.to_list();
      expect(r, predicted == nums.G, "G differs from the formula value " + predicted.to_list());
    });
  };
}

template <Field K>
Task lemma_big_task(const K& field, int n, int maxdeg, std::uint64_t seed, std::size_t i) {
  return [=] {
    return guarded([&](InstanceResult& r) {
      auto fs = corpus_aci(field, n, maxdeg, seed, i);
      r.input = texts(fs);
      auto sys = aci_system(fs);
      auto nums = numerators(sys);
      const int s = sys.s(), d0 = sys.degrees[0];
      const int u = std::max(nums.G.degree(), nums.F.degree());
      r.summary = "G(1)=" + std::to_string(nums.G.at_one()) + " deg F=" + std::to_string(nums.F.degree()) +
                  " deg G=" + std::to_string(nums.G.degree()) + " s=" + std::to_string(s);
      expect(r, nums.G.at_one() == nums.F.at_one(), "G(1) != F(1)");
      expect(r, nums.F.degree() <= s + 1, "deg F > s + 1");
      expect(r, nums.G.degree() <= s + 1 + d0, "deg G > s + 1 + d_0");
      expect(r, ideal_piece_rows(nums.gj, u).rows() == ideal_piece_rows(nums.gi, u).rows(),
             "J_p != I_p at p = " + std::to_string(u));
    });
  };
}

template <Field K>
Task cayley_bacharach_task(const K& field, int n, int maxdeg, std::uint64_t seed, std::size_t i) {
  return [=] {
    return guarded([&](InstanceResult& r) {
      auto fs = corpus_aci(field, n, maxdeg, seed, i);
      r.input = texts(fs);
      auto sys = aci_system(fs);
      auto nums = numerators(sys);
      const int s = sys.s(), d0 = sys.degrees[0];
      const std::int64_t tau = nums.F.at_one();
      HilbertSeries hi{nums.F, 1};
      const std::span<const Polynomial<K>> span(sys.fs);
      for (int k = 0; k <= s; ++k) {
        auto lhs = cayley_bacharach_failure(span, k);
        auto rhs = tau - hilbert_function(hi, k);
        expect(r, lhs == rhs,
               "k=" + std::to_string(k) + ": dim ((W:f_0)/W) = " + std::to_string(lhs) + ", F(1) - HF = " +
                   std::to_string(rhs));
      }
      const int m = relation_min_degree(span, d0);
      const int v = s - nums.F.degree();
      expect(r, m - d0 == v + 1, "first kernel degree " + std::to_string(m - d0) + " != v + 1 = " + std::to_string(v + 1));
      expect(r, m == sys.degree_sum() - sys.n() - nums.F.degree(), "minimal relation degree " + std::to_string(m));
      r.summary = "s=" + std::to_string(s) + " first kernel at " + std::to_string(m - d0) + " m=" + std::to_string(m);
    });
  };
}

template <Field K>
Task lefschetz_task(FamilyInstance<K> inst, std::uint64_t seed, int trials) {
  return [=] {
    return guarded([&](InstanceResult& r) {
      r.label = inst.name + " " + inst.params;
      r.input = family_input(inst);
      auto sys = system_of(inst, seed);
      if (sys.n() != 2) throw std::invalid_argument("lefschetz-n2 needs n = 2");
      AnalyzeOptions opt;
      opt.seed = seed;
      opt.trials = trials;
      auto rep = analyze(sys, opt);
      const auto& p = *rep.lefschetz;
      const int d = *rep.d;
      const bool ct_side = *rep.ct >= 3 * (d - 2) - p.i0;
      r.summary = "n_k=" + list(p.n_k) + " i0=" + std::to_string(p.i0) + " windows " + (p.windows_hold ? "ok" : "FAIL") +
                  "; M-surjectivity from i0: " + (p.m_surjective_from_i0 ? "PASS" : "FAIL");
      expect(r, p.windows_hold, "N is not injective below T/2 or not surjective from i0");
      expect(r, p.symmetric, "n_k is not symmetric");
      expect(r, p.unimodal, "n_k is not unimodal");
      expect(r, p.m_surjective_from_i0 == ct_side, "M-surjectivity from i0 disagrees with ct >= 3(d-2) - i0");
      expect(r, p.m_surjective_from_i0 == p.m_surjective_predicted, "M-surjectivity from i0 disagrees with i0 >= deg F");
      expect(r, rep.st <= 3 * (d - 2) + 1, "st > 3(d-2) + 1");
      for (auto& m : prediction_mismatches(inst.predicted, rep)) r.failures.push_back(m);
      if (inst.predicted.saturated_equals_jacobian.value_or(false)) {
        for (auto nk : p.n_k) expect(r, nk == 0, "N is not zero");
        for (const auto& row : p.m_rows) expect(r, row.injective(), "l not injective on M at k=" + std::to_string(row.k));
      }
    });
  };
}

template <Field K>
Task duality_task(const K& field, int maxdeg, std::uint64_t seed, std::size_t i, int trials) {
  return [=] {
    return guarded([&](InstanceResult& r) {
      auto fs = corpus_aci(field, 2, maxdeg, seed, i);
      r.input = texts(fs);
      auto sys = aci_system(fs);
      std::mt19937_64 rng(seed + i);
      auto l = sample_regular_forms(sys, trials, rng).front();
      auto records = duality_checks(sys, l);
      for (const auto& rec : records) {
        const auto p = std::to_string(rec.p);
        expect(r, rec.duality_holds(), "p=" + p + ": f_0 surjectivity at p does not match injectivity at q-p");
        expect(r, rec.m1_surjectivity_holds(), "p=" + p + ": surjectivity on B/(l) does not match l on M");
        expect(r, rec.m1_injectivity_holds(), "p=" + p + ": f_0 injective on B/(l) but l not injective on M");
      }
      r.summary = "q=" + std::to_string(sys.q()) + " checked p=0.." + std::to_string(records.back().p);
    });
  };
}

template <Field K>
Task hmnw_task(const K& field, std::uint64_t seed, std::size_t i, int trials) {
  return [=] {
    return guarded([&](InstanceResult& r) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x686d6e77u,
                        static_cast<std::uint32_t>(i)};
      std::mt19937_64 rng(seq);
      auto fs = random_artinian_ci(field, 4, rng);
      r.input = texts(fs);
      const bool ok = has_lefschetz_element(field, 3, std::span<const Polynomial<K>>(fs), trials, rng);
      r.summary = ok ? "maximal rank in every degree" : "no sampled l has maximal rank";
      expect(r, ok, "no Lefschetz element among the sampled forms");
    });
  };
}

template <Field K>
Task n1_example_task(const K& field, int d1) {
  return [=] {
    return guarded([&](InstanceResult& r) {
      auto inst = n1_example(field, d1);
      r.label = inst.name + " " + inst.params;
      r.input = texts(inst.fs);
      auto sys = aci_system(inst.fs);
      auto a = assumption_A_max_k(sys, parse_polynomial("x0 - x1", field, 2));
      auto b = assumption_A_max_k(sys, parse_polynomial("x0", field, 2));
      r.summary = "l=x0-x1: k=" + (a.max_k ? std::to_string(*a.max_k) : "none") +
                  "; l=x0: k=" + (b.max_k ? std::to_string(*b.max_k) : "none");
      expect(r, a.max_k == d1 - 3, "l = x0 - x1 should give k = d_1 - 3");
      expect(r, !b.max_k.has_value(), "l = x0 should give no k");
      expect(r, a.bound_holds, "deg L > q - k - 1");
    });
  };
}

template <Field K>
Task n1_random_task(const K& field, std::uint64_t seed, std::size_t i, int trials) {
  return [=] {
    return guarded([&](InstanceResult& r) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x6e31u,
                        static_cast<std::uint32_t>(i)};
      std::mt19937_64 rng(seq);
      auto fs = random_height_one_pair(field, 8, rng);
      r.input = texts(fs);
      auto sys = aci_system(fs);
      const bool ok = n1_lefschetz_holds(sys, trials, rng);
      r.summary = "d=(" + std::to_string(sys.degrees[0]) + "," + std::to_string(sys.degrees[1]) + ") " +
                  (ok ? "Lefschetz element found" : "no Lefschetz element");
      expect(r, ok, "no sampled l has the n = 1 properties");
    });
  };
}

template <Field K>
void c1_finding(InstanceResult& r, const InvariantReport& rep, std::uint64_t seed, const std::string& field) {
  r.summary = "deg G=" + std::to_string(rep.st) + " deg F=" + std::to_string(rep.deg_F) +
              " slack=" + std::to_string(rep.c1.slack);
  if (!rep.c1.holds) {
    std::string repro = "C1 violated: deg G < deg F; field " + field + ", seed " + std::to_string(seed) + ", input";
    for (const auto& t : r.input) repro += " \"" + t + "\"";
    r.findings.push_back(repro);
  }
}

template <Field K>
Task c1_aci_task(const K& field, int n, int maxdeg, std::uint64_t seed, std::size_t i, int trials) {
  return [=] {
    return guarded([&](InstanceResult& r) {
      auto fs = corpus_aci(field, n, maxdeg, seed, i);
      r.input = texts(fs);
      AnalyzeOptions opt;
      opt.seed = seed;
      opt.trials = trials;
      opt.lefschetz = false;
      c1_finding<K>(r, analyze(aci_system(fs), opt), seed, field.name());
    });
  };
}

template <Field K>
Task c1_family_task(FamilyInstance<K> inst, std::uint64_t seed, int trials) {
  return [=] {
    return guarded([&](InstanceResult& r) {
      r.label = inst.name + " " + inst.params;
      r.input = family_input(inst);
      AnalyzeOptions opt;
      opt.seed = seed;
      opt.trials = trials;
      opt.lefschetz = false;
      c1_finding<K>(r, analyze(system_of(inst, seed), opt), seed, inst.f ? inst.f->field().name() : inst.fs[0].field().name());
    });
  };
}

template <Field K>
Task c2_task(FamilyInstance<K> inst, std::uint64_t seed, int trials) {
  return [=] {
    return guarded([&](InstanceResult& r) {
      r.label = inst.name + " " + inst.params;
      r.input = family_input(inst);
      AnalyzeOptions opt;
      opt.seed = seed;
      opt.trials = trials;
      opt.lefschetz = false;
      opt.alpha = inst.predicted.alpha;
      auto rep = analyze(system_of(inst, seed), opt);
      if (!rep.c2) throw std::logic_error("C2 needs alpha and a hypersurface");
      r.summary = "mdr=" + std::to_string(rep.mdr) + " alpha=" + inst.predicted.alpha->get_str() +
                  " slack=" + rep.c2->slack.get_str();
      if (!rep.c2->holds) r.findings.push_back("C2 violated: mdr < d alpha - n, slack " + rep.c2->slack.get_str());
      else if (rep.c2->slack != 0) r.findings.push_back("C2 holds but not with equality, slack " + rep.c2->slack.get_str());
    });
  };
}

template <Field K>
Task comput_family_task(FamilyInstance<K> inst, std::uint64_t seed, int trials, bool expect_ci) {
  return [=] {
    return guarded([&](InstanceResult& r) {
      r.label = inst.name + " " + inst.params;
      r.input = family_input(inst);
      AnalyzeOptions opt;
      opt.seed = seed;
      opt.trials = trials;
      opt.lefschetz = inst.predicted.m_surjective_from_i0.has_value();
      auto rep = analyze(system_of(inst, seed), opt);
      std::string ci = "none";
      if (rep.ci_type) {
        ci.clear();
        for (int a : *rep.ci_type) ci += (ci.empty() ? "" : ",") + std::to_string(a);
      }
      r.summary = "tau=" + std::to_string(rep.tau) + " st=" + std::to_string(rep.st) + " ci_type=" + ci;
      if (expect_ci)
        expect(r, rep.ci_type.has_value(), "saturation is not a complete intersection");
      else
        expect(r, !rep.ci_type || rep.ci_type->size() != 2, "unexpected two-element ci_type");
      if (rep.d) expect(r, rep.st <= (rep.n + 1) * (*rep.d - 2) + 1, "st > (n+1)(d-2) + 1");
      for (auto& m : prediction_mismatches(inst.predicted, rep)) r.failures.push_back(m);
    });
  };
}

template <Field K>
Task comput_aci_task(const K& field, int maxdeg, std::uint64_t seed, std::size_t i, int trials) {
  return [=] {
    return guarded([&](InstanceResult& r) {
      auto fs = corpus_aci(field, 2, maxdeg, seed, i);
      r.input = texts(fs);
      AnalyzeOptions opt;
      opt.seed = seed;
      opt.trials = trials;
      opt.lefschetz = false;
      // the CI-type checks run inside analyze whenever I is a complete intersection
      auto rep = analyze(aci_system(fs), opt);
      r.summary = rep.ci_type ? "ci_type present, checks exact" : "I not a complete intersection";
    });
  };
}

}  // namespace

template <Field K>
SuiteResult run_suite(const K& field, const std::string& name, const SuiteOptions& o) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown suite '" + name + "'");
  SuiteResult result;
  result.name = name;
  result.mandatory = name.rfind("conjecture-", 0) != 0;
  const std::uint64_t seed = o.seed;
  const int n = o.n.value_or(2);
  const int maxdeg = o.max_degree.value_or(n >= 3 ? 4 : 5);
  auto count = [&](int fallback) { return static_cast<std::size_t>(o.count.value_or(fallback)); };
  auto families = [&](std::vector<FamilyInstance<K>> builtin) {
    if (o.family) return std::vector<FamilyInstance<K>>{make_family(field, *o.family)};
    return builtin;
  };

  std::vector<Task> tasks;
  std::vector<std::string> labels;
  auto corpus_label = [&](std::size_t i) { return "aci n=" + std::to_string(n) + " #" + std::to_string(i); };

  if (name == "theorem-main" || name == "lemma-big" || name == "cayley-bacharach") {
    const std::size_t c = count(name == "cayley-bacharach" ? 25 : 100);
    for (std::size_t i = 0; i < c; ++i) {
      labels.push_back(corpus_label(i));
      if (name == "theorem-main") tasks.push_back(theorem_main_task(field, n, maxdeg, seed, i));
      else if (name == "lemma-big") tasks.push_back(lemma_big_task(field, n, maxdeg, seed, i));
      else tasks.push_back(cayley_bacharach_task(field, n, maxdeg, seed, i));
    }
  } else if (name == "lefschetz-n2") {
    for (auto& inst : families(curve_families(field))) {
      labels.push_back("");
      tasks.push_back(lefschetz_task(std::move(inst), seed, o.trials));
    }
    if (!o.family)
      for (std::size_t i = 0; i < count(10); ++i) {
        FamilyInstance<K> inst;
        inst.name = "curve";
        inst.params = "#" + std::to_string(i);
        inst.f = corpus_curve(field, seed, i);
        labels.push_back("");
        tasks.push_back(lefschetz_task(std::move(inst), seed, o.trials));
      }
  } else if (name == "duality-p1") {
    for (std::size_t i = 0; i < count(25); ++i) {
      labels.push_back("aci n=2 #" + std::to_string(i));
      tasks.push_back(duality_task(field, o.max_degree.value_or(5), seed, i, o.trials));
    }
  } else if (name == "hmnw") {
    for (std::size_t i = 0; i < count(25); ++i) {
      labels.push_back("artinian ci #" + std::to_string(i));
      tasks.push_back(hmnw_task(field, seed, i, o.trials));
    }
  } else if (name == "n1-lefschetz") {
    for (int d1 = 3; d1 <= 8; ++d1) {
      labels.push_back("");
      tasks.push_back(n1_example_task(field, d1));
    }
    for (std::size_t i = 0; i < count(25); ++i) {
      labels.push_back("height-one pair #" + std::to_string(i));
      tasks.push_back(n1_random_task(field, seed, i, o.trials));
    }
  } else if (name == "conjecture-c1") {
    for (std::size_t i = 0; i < count(100); ++i) {
      labels.push_back(corpus_label(i));
      tasks.push_back(c1_aci_task(field, n, maxdeg, seed, i, o.trials));
    }
    std::vector<FamilyInstance<K>> fams = e1_corpus(field);
    for (auto& f : curve_families(field)) fams.push_back(std::move(f));
    for (std::size_t i = 0; i < count(100) / 5; ++i) {
      FamilyInstance<K> inst;
      inst.name = "curve";
      inst.params = "#" + std::to_string(i);
      inst.f = corpus_curve(field, seed, i);
      fams.push_back(std::move(inst));
    }
    for (auto& inst : families(std::move(fams))) {
      labels.push_back("");
      tasks.push_back(c1_family_task(std::move(inst), seed, o.trials));
    }
  } else if (name == "conjecture-c2-e1") {
    std::vector<FamilyInstance<K>> fams = e1_corpus(field);
    if (o.family) {
      if (o.family->name != "e1") throw std::invalid_argument("conjecture-c2-e1 takes only e1 families");
      fams = {make_family(field, *o.family)};
    }
    for (auto& inst : fams) {
      labels.push_back("");
      tasks.push_back(c2_task(std::move(inst), seed, o.trials));
    }
  } else if (name == "comput-ci") {
    std::vector<std::pair<FamilyInstance<K>, bool>> fams;
    if (o.family) {
      fams.emplace_back(make_family(field, *o.family), o.family->name != "three-point" || o.family->collinear);
    } else {
      for (auto& f : e1_corpus(field)) fams.emplace_back(std::move(f), true);
      for (auto [p, q, d] : {std::tuple{1, 3, 4}, {2, 2, 4}, {2, 3, 5}, {1, 4, 5}})
        fams.emplace_back(rkl0_curve(field, p, q, d), true);
      fams.emplace_back(three_point_curve(field, 4, true), true);
      fams.emplace_back(three_point_curve(field, 5, true), true);
      fams.emplace_back(three_point_curve(field, 3, false), false);
      fams.emplace_back(three_point_curve(field, 4, false), false);
    }
    for (auto& [inst, ci] : fams) {
      labels.push_back("");
      tasks.push_back(comput_family_task(std::move(inst), seed, o.trials, ci));
    }
    if (!o.family)
      for (std::size_t i = 0; i < count(25); ++i) {
        labels.push_back("aci n=2 #" + std::to_string(i));
        tasks.push_back(comput_aci_task(field, o.max_degree.value_or(5), seed, i, o.trials));
      }
  }

  result.instances.resize(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    InstanceResult r = tasks[i]();
    r.index = i;
    if (!labels[i].empty()) r.label = labels[i];
    result.instances[i] = std::move(r);
  }
  return result;
}

#define ACI_INSTANTIATE(K)                                                                                 \
  template SuiteResult run_suite(const K&, const std::string&, const SuiteOptions&);                      \
  template std::vector<Polynomial<K>> corpus_aci(const K&, int, int, std::uint64_t, std::size_t);         \
  template Polynomial<K> corpus_curve(const K&, std::uint64_t, std::size_t);

ACI_INSTANTIATE(PrimeField)
ACI_INSTANTIATE(RationalField)

}  // namespace aci
