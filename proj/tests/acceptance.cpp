// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "aci/families.hpp"
#include "aci/ideal_ops.hpp"
#include "aci/invariants.hpp"
#include "aci/parse.hpp"
#include "aci/suites.hpp"

using namespace aci;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string tally(const SuiteResult& r) {
  std::string s = std::to_string(r.passed()) + "/" + std::to_string(r.instances.size());
  for (const auto& i : r.instances)
    if (!i.pass) {
      s += " first failure: " + i.label + ": " + (i.failures.empty() ? std::string("?") : i.failures.front());
      break;
    }
  return s;
}

SuiteResult suite(const std::string& name, int count, int n = 2, int max_degree = -1) {
  SuiteOptions o;
  o.seed = kSeed;
  o.count = count;
  o.n = n;
  if (max_degree > 0) o.max_degree = max_degree;
  return run_suite(PrimeField(), name, o);
}

bool all_pass(const SuiteResult& r) { return r.passed() == r.instances.size() && !r.instances.empty(); }

InvariantReport analyze_family(const FamilyInstance<PrimeField>& inst, bool lefschetz) {
  std::mt19937_64 rng(kSeed);
  AnalyzeOptions o;
  o.seed = kSeed;
  o.lefschetz = lefschetz;
  o.alpha = inst.predicted.alpha;
  return analyze(jacobian_ideal(*inst.f, rng), o);
}

Verdict criterion1() {
  auto a = suite("theorem-main", 100, 2, 5);
  auto b = suite("theorem-main", 25, 3, 4);
  return {all_pass(a) && all_pass(b), "n=2: " + tally(a) + ", n=3: " + tally(b)};
}

Verdict criterion2() {
  auto a = suite("lemma-big", 100, 2, 5);
  auto b = suite("lemma-big", 25, 3, 4);
  return {all_pass(a) && all_pass(b), "n=2: " + tally(a) + ", n=3: " + tally(b)};
}

Verdict criterion3() {
  auto a = suite("cayley-bacharach", 25, 2, 5);
  return {all_pass(a), tally(a)};
}

Verdict criterion4() {
  int ok = 0;
  const int total = 25;
  for (int i = 0; i < total; ++i) {
    auto fs = corpus_aci(PrimeField(), 2, 5, kSeed + 1, static_cast<std::size_t>(i));
    auto sys = aci_system(fs);
    auto gj = reduced_groebner(Ideal<PrimeField>(sys.field, sys.nvars, fs));
    auto F = hilbert_series(saturate_irrelevant(gj.ideal())).numerator;
    const int d0 = sys.degrees[0];
    const int v = sys.s() - F.degree();
    // first j with f_0: (S/W)_j -> (S/W)_{j+d0} not injective, scanning j upward
    GradedModule<PrimeField> sw(reduced_groebner(Ideal<PrimeField>(sys.field, sys.nvars, {fs.begin() + 1, fs.end()})),
                                sys.degree_sum() + 1);
    int first = -1;
    for (int j = 0; j + d0 <= sys.degree_sum(); ++j)
      if (!multiplication_map(sw, fs[0], j, d0).injective()) {
        first = j;
        break;
      }
    const int m = relation_min_degree(std::span<const Polynomial<PrimeField>>(fs), d0);
    if (first == v + 1 && m == sys.degree_sum() - sys.n() - F.degree() && m == first + d0) ++ok;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total)};
}

Verdict criterion5() {
  PrimeField k;
  std::vector<FamilyInstance<PrimeField>> cases{
      e1_family(k, 2, {2, 2}, {2, 2}), e1_family(k, 2, {1, 2}, {4, 2}), e1_family(k, 2, {1, 1}, {6, 6}),
      e1_family(k, 3, {1, 1, 1}, {3, 3, 3})};
  bool pass = true;
  std::string detail;
  for (const auto& inst : cases) {
    auto rep = analyze_family(inst, false);
    auto mism = prediction_mismatches(inst.predicted, rep);
    bool ok = mism.empty() && inst.predicted.tau && inst.predicted.ct && inst.predicted.st && inst.predicted.mdr &&
              inst.predicted.ci_type;
    pass = pass && ok;
    detail += (detail.empty() ? "" : "; ") + inst.params + (ok ? " ok" : " MISMATCH " + (mism.empty() ? "" : mism[0]));
  }
  auto flagship = analyze_family(cases[0], false);
  bool g = flagship.G == IntPoly{1, 2, 3, 1, -1, -2};
  std::vector<std::int64_t> hf;
  for (int t = 0; t <= 6; ++t) hf.push_back(hilbert_function(HilbertSeries{flagship.G, 1}, t));
  bool h = hf == std::vector<std::int64_t>{1, 3, 6, 7, 6, 4, 4};
  detail += std::string("; d=4 G ") + (g ? "ok" : "WRONG") + ", HF " + (h ? "ok" : "WRONG");
  return {pass && g && h, detail};
}

Verdict criterion6() {
  int ok = 0, total = 0;
  std::string detail;
  auto check = [&](const Polynomial<PrimeField>& f, const std::string& label) {
    ++total;
    std::mt19937_64 rng(kSeed);
    AnalyzeOptions o;
    o.seed = kSeed;
    o.trials = 5;
    auto rep = analyze(jacobian_ideal(f, rng), o);
    const auto& p = *rep.lefschetz;
    if (p.windows_hold && p.symmetric && p.unimodal) ++ok;
    else detail += " " + label + " fails";
  };
  for (std::size_t i = 0; i < 10; ++i) check(corpus_curve(PrimeField(), kSeed, i), "curve #" + std::to_string(i));
  check(*e1_family(PrimeField(), 2, {2, 2}, {2, 2}).f, "E1 d=4");
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + detail};
}

Verdict criterion7() {
  PrimeField k;
  std::vector<std::pair<std::string, Polynomial<PrimeField>>> cases;
  cases.emplace_back("E1 d=4 (4 nodes)", *e1_family(k, 2, {2, 2}, {2, 2}).f);
  cases.emplace_back("E1 d=6 (9 nodes)", *e1_family(k, 2, {3, 3}, {2, 2}).f);
  cases.emplace_back("3 nodes d=4", *three_point_curve(k, 4, false).f);
  cases.emplace_back("3 collinear nodes d=4", *three_point_curve(k, 4, true).f);
  cases.emplace_back("rkl0 (2,3,5)", *rkl0_curve(k, 2, 3, 5).f);
  bool pass = true;
  int positive = 0;
  std::string detail;
  for (const auto& [label, f] : cases) {
    std::mt19937_64 rng(kSeed);
    AnalyzeOptions o;
    o.seed = kSeed;
    auto rep = analyze(jacobian_ideal(f, rng), o);
    const auto& p = *rep.lefschetz;
    const int d = *rep.d;
    const bool rhs = *rep.ct >= 3 * (d - 2) - p.i0;
    pass = pass && p.m_surjective_from_i0 == rhs;
    if (p.m_surjective_from_i0) ++positive;
    if (label.rfind("rkl0", 0) == 0) pass = pass && !p.m_surjective_from_i0 && !rhs;
    detail += (detail.empty() ? "" : "; ") + label + (p.m_surjective_from_i0 ? " surj" : " not surj") +
              (rhs ? "/ct ok" : "/ct short");
  }
  return {pass && positive > 0, detail};
}

Verdict criterion8() {
  auto a = suite("duality-p1", 25);
  return {all_pass(a), tally(a)};
}

Verdict criterion9() {
  auto a = suite("n1-lefschetz", 25);
  return {all_pass(a), tally(a) + " (6 fixed examples d1=3..8 + 25 random pairs)"};
}

Verdict criterion10() {
  auto a = suite("hmnw", 25);
  return {all_pass(a), tally(a)};
}

Verdict criterion11() {
  auto c1 = suite("conjecture-c1", 100);
  auto c2 = suite("conjecture-c2-e1", 0);
  std::size_t equal = 0;
  for (const auto& i : c2.instances)
    if (i.pass && i.findings.empty()) ++equal;
  bool pass = all_pass(c1) && all_pass(c2) && equal == c2.instances.size();
  std::string detail = "C1 evaluated " + tally(c1) + ", " + std::to_string(c1.findings()) +
                       " violations; C2 equality on " + std::to_string(equal) + "/" +
                       std::to_string(c2.instances.size()) + " E1 instances";
  for (const auto& i : c1.instances)
    for (const auto& f : i.findings) detail += "\n      finding: " + f;
  return {pass, detail};
}

template <Field K>
InvariantReport plain(const std::vector<Polynomial<K>>& fs) {
  AnalyzeOptions o;
  o.seed = kSeed;
  o.lefschetz = false;
  return analyze(aci_system(fs), o);
}

template <Field K>
std::vector<std::int64_t> cb_values(const std::vector<Polynomial<K>>& fs, int s) {
  std::vector<std::int64_t> out;
  for (int k = 0; k <= s; ++k) out.push_back(cayley_bacharach_failure(std::span<const Polynomial<K>>(fs), k));
  return out;
}

Verdict criterion12() {
  PrimeField gf;
  RationalField q;
  int ok = 0, total = 0;
  std::string detail;
  auto same = [](const InvariantReport& a, const InvariantReport& b) {
    return a.G == b.G && a.F == b.F && a.tau == b.tau && a.st == b.st && a.ct == b.ct && a.mdr == b.mdr &&
           a.relation_degree == b.relation_degree && a.ci_type == b.ci_type &&
           a.saturated_equals_jacobian == b.saturated_equals_jacobian;
  };
  for (std::size_t i = 0; i < 10; ++i) {
    ++total;
    auto fq = corpus_aci(q, 2, 5, kSeed, i);
    std::vector<Polynomial<PrimeField>> fp;
    for (const auto& f : fq) fp.push_back(parse_polynomial(f.to_string(), gf, 3));
    auto rq = plain(fq);
    auto rp = plain(fp);
    const int s = aci_system(fq).s();
    if (same(rq, rp) && cb_values(fq, s) == cb_values(fp, s)) ++ok;
    else detail += " #" + std::to_string(i) + " differs";
  }
  for (const auto& [b, c] : {std::pair<std::vector<int>, std::vector<int>>{{2, 2}, {2, 2}}, {{1, 2}, {4, 2}}}) {
    ++total;
    auto eq = e1_family(q, 2, b, c);
    auto ep = e1_family(gf, 2, b, c);
    std::mt19937_64 r1(kSeed), r2(kSeed);
    AnalyzeOptions o;
    o.lefschetz = false;
    auto rq = analyze(jacobian_ideal(*eq.f, r1), o);
    auto rp = analyze(jacobian_ideal(*ep.f, r2), o);
    if (same(rq, rp) && prediction_mismatches(eq.predicted, rq).empty()) ++ok;
    else detail += " " + eq.params + " differs";
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " instances agree exactly" + detail};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"G from the degrees and F", criterion1},
      {"G(1)=F(1), degree bounds, J_p=I_p", criterion2},
      {"Cayley-Bacharach counts", criterion3},
      {"first kernel degree and minimal relation degree", criterion4},
      {"E1 closed forms", criterion5},
      {"Lefschetz windows on N, symmetry, unimodality", criterion6},
      {"M-surjectivity from i0 iff ct >= 3(d-2)-i0", criterion7},
      {"duality on B/(l) and the surjectivity criterion", criterion8},
      {"n=1 example and Lefschetz elements", criterion9},
      {"Artinian complete intersections have Lefschetz elements", criterion10},
      {"conjecture screens C1 and C2", criterion11},
      {"GF(65521) and rational agree", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) ++failed;
    std::printf("%s %2zu  %s: %s  [%.1fs]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, v.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
