#include "doctest.h"

#include "aci/families.hpp"
#include "aci/ideal_ops.hpp"
#include "aci/invariants.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace aci;
using testing_util::P;
using testing_util::Ps;

namespace {

InvariantReport run(const Polynomial<PrimeField>& f, bool lefschetz = true) {
  std::mt19937_64 rng(0);
  AnalyzeOptions opt;
  opt.lefschetz = lefschetz;
  return analyze(jacobian_ideal(f, rng), opt);
}

std::vector<std::int64_t> coeffs(const IntPoly& p) { return p.coefficients(); }

/// Every number the oracle can produce, compared with the report.
void agrees_with_oracle(const Polynomial<PrimeField>& f, const InvariantReport& rep, int top) {
  auto o = oracle::jacobian_numbers(f, top, top);
  CHECK(coeffs(rep.G) == o.G);
  CHECK(coeffs(rep.F) == o.F);
  CHECK(rep.tau == o.tau);
  CHECK(rep.st == o.st);
  REQUIRE(rep.ct.has_value());
  CHECK(*rep.ct == o.ct);
  CHECK(rep.mdr == o.ct - f.degree() + 2);
  if (rep.lefschetz)
    for (std::size_t k = 0; k < rep.lefschetz->n_k.size() && k < o.n_k.size(); ++k)
      CHECK(static_cast<std::int64_t>(rep.lefschetz->n_k[k]) == o.n_k[k]);
}

}  // namespace

TEST_CASE("E1 quartic: numerators, invariants, profile") {
  auto inst = e1_family(PrimeField(), 2, {2, 2}, {2, 2});
  auto rep = run(*inst.f);
  CHECK(coeffs(rep.G) == std::vector<std::int64_t>{1, 2, 3, 1, -1, -2});
  std::vector<std::int64_t> hf;
  for (int k = 0; k <= 6; ++k) hf.push_back(hilbert_function(HilbertSeries{rep.G, 1}, k));
  CHECK(hf == std::vector<std::int64_t>{1, 3, 6, 7, 6, 4, 4});
  CHECK(rep.tau == 4);
  CHECK(rep.st == 5);
  CHECK(rep.ct == 4);
  CHECK(rep.mdr == 2);
  CHECK(rep.ci_type == std::vector<int>{2, 2});
  REQUIRE(rep.lefschetz);
  CHECK(rep.lefschetz->n_k == std::vector<std::size_t>{0, 0, 2, 3, 2, 0, 0});
  CHECK(rep.lefschetz->i0 == 3);
  CHECK(rep.lefschetz->windows_hold);
  CHECK(rep.lefschetz->symmetric);
  CHECK(rep.lefschetz->unimodal);
  agrees_with_oracle(*inst.f, rep, 8);
}

TEST_CASE("E1 closed forms match the computed report") {
  struct Case {
    int n;
    std::vector<int> b, c;
  };
  for (const auto& c : std::vector<Case>{{2, {2, 2}, {2, 2}},
                                         {2, {1, 2}, {4, 2}},
                                         {2, {1, 1}, {6, 6}},
                                         {3, {1, 1, 1}, {3, 3, 3}},
                                         {2, {2, 3}, {3, 2}},
                                         {2, {2, 2}, {2, 2}}}) {
    auto inst = e1_family(PrimeField(), c.n, c.b, c.c);
    CAPTURE(inst.params);
    std::mt19937_64 rng(0);
    AnalyzeOptions opt;
    opt.alpha = inst.predicted.alpha;
    opt.lefschetz = false;
    auto rep = analyze(jacobian_ideal(*inst.f, rng), opt);
    CHECK(prediction_mismatches(inst.predicted, rep).empty());
    REQUIRE(rep.c2);
    CHECK(rep.c2->slack == 0);
    agrees_with_oracle(*inst.f, rep, rep.st + 2);
  }
}

TEST_CASE("E1 with the plus sign has the same invariants") {
  auto minus = run(*e1_family(PrimeField(), 2, {2, 2}, {2, 2}).f, false);
  auto plus = run(*e1_family(PrimeField(), 2, {2, 2}, {2, 2}, true).f, false);
  CHECK(minus.G == plus.G);
  CHECK(minus.F == plus.F);
  CHECK(minus.ci_type == plus.ci_type);
}

TEST_CASE("E1 parameter validation") {
  CHECK_THROWS_AS(e1_family(PrimeField(), 2, {2, 1}, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(e1_family(PrimeField(), 2, {4, 4}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(e1_family(PrimeField(), 2, {2}, {2}), std::invalid_argument);
}

TEST_CASE("nodal E1 carries the Alexander polynomial note") {
  auto n2 = e1_family(PrimeField(), 2, {2, 2}, {2, 2});
  auto n3 = e1_family(PrimeField(), 3, {2, 2, 2}, {2, 2, 2});
  REQUIRE(n2.predicted.notes.size() == 1);
  CHECK(n2.predicted.notes[0].find("t - 1") != std::string::npos);
  CHECK(n3.predicted.notes[0].find("t + 1") != std::string::npos);
}

TEST_CASE("rkl0 curves: ct = d - 1 and the M-surjectivity split") {
  for (auto [p, q, d] : {std::tuple{1, 3, 4}, {2, 2, 4}, {2, 3, 5}}) {
    auto inst = rkl0_curve(PrimeField(), p, q, d);
    auto rep = run(*inst.f);
    CAPTURE(inst.params);
    CHECK(rep.ct == d - 1);
    CHECK(rep.mdr == 1);
    CHECK(prediction_mismatches(inst.predicted, rep).empty());
    agrees_with_oracle(*inst.f, rep, rep.st + 2);
  }
  auto bad = run(*rkl0_curve(PrimeField(), 2, 3, 5).f);
  CHECK_FALSE(bad.lefschetz->m_surjective_from_i0);
  CHECK_FALSE(bad.lefschetz->m_surjective_predicted);
  CHECK(bad.lefschetz->windows_hold);
  CHECK_THROWS_AS(rkl0_curve(PrimeField(), 2, 2, 5), std::invalid_argument);
}

TEST_CASE("free divisors: saturated Jacobian ideal, N = 0, l injective on M") {
  for (const auto& inst : free_divisor_examples(PrimeField())) {
    CAPTURE(inst.params);
    auto rep = run(*inst.f);
    CHECK(rep.saturated_equals_jacobian);
    for (auto nk : rep.lefschetz->n_k) CHECK(nk == 0);
    for (const auto& row : rep.lefschetz->m_rows) CHECK(row.injective());
    CHECK(rep.F == rep.G);
  }
  // oracle: I_k = J_k in every degree checked
  auto f = *free_divisor_examples(PrimeField())[0].f;
  auto o = oracle::jacobian_numbers(f, 8, 8);
  for (auto nk : o.n_k) CHECK(nk == 0);
}

TEST_CASE("three-point curves: collinear gives ci type (1,3) and st = 3d - 6") {
  for (int d : {4, 5}) {
    auto inst = three_point_curve(PrimeField(), d, true);
    auto rep = run(*inst.f, false);
    CAPTURE(d);
    CHECK(rep.tau == 3);
    CHECK(rep.ci_type == std::vector<int>{1, 3});
    CHECK(rep.st == 3 * d - 6);
    agrees_with_oracle(*inst.f, rep, rep.st + 2);
  }
  for (int d : {3, 4}) {
    auto rep = run(*three_point_curve(PrimeField(), d, false).f, false);
    CAPTURE(d);
    CHECK(rep.tau == 3);
    CHECK_FALSE(rep.ci_type.has_value());
  }
}

TEST_CASE("n = 1 example: G = 1 + t - t^3 and assumption A") {
  auto sys = aci_system(Ps({"x0*x1", "x1^3"}, 2));
  auto rep = analyze(sys);
  CHECK(coeffs(rep.G) == std::vector<std::int64_t>{1, 1, 0, -1});
  CHECK(coeffs(rep.F) == std::vector<std::int64_t>{1});
  CHECK(rep.relation_degree == 4);
  for (int d1 = 3; d1 <= 8; ++d1) {
    auto s = aci_system(n1_example(PrimeField(), d1).fs);
    CAPTURE(d1);
    auto a = assumption_A_max_k(s, P("x0 - x1", 2));
    CHECK(a.max_k == d1 - 3);
    CHECK(a.bound_holds);
    CHECK_FALSE(assumption_A_max_k(s, P("x0", 2)).max_k.has_value());
  }
}

TEST_CASE("n = 1 Lefschetz property on height-one pairs") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    auto fs = random_height_one_pair(PrimeField(), 6, rng);
    auto sys = aci_system(fs);
    CHECK(sys.degrees[0] < sys.degrees[1]);
    CHECK(n1_lefschetz_holds(sys, 5, rng));
  }
}

TEST_CASE("cone detection") {
  std::mt19937_64 rng(0);
  // f = x1^3 + x2^3 does not involve x0
  auto sys = jacobian_ideal(P("x1^3 + x2^3", 3), rng);
  CHECK(cone_check(sys).cone);
  // (x0^2 - x1^2)^2 + (x0^2 - x2^2)^2
  CHECK_FALSE(cone_check(jacobian_ideal(*e1_family(PrimeField(), 2, {2, 2}, {2, 2}).f, rng)).cone);
  // a cone has ci type (d-1, ..., d-1)
  auto rep = run(*e1_family(PrimeField(), 2, {1, 1}, {6, 6}).f, false);
  CHECK(rep.cone);
  CHECK(rep.ci_type == std::vector<int>{5, 5});
}

TEST_CASE("hypothesis gate") {
  std::mt19937_64 rng(0);
  CHECK_THROWS_AS(jacobian_ideal(P("x0^3", 3), rng), HypothesisError);
  // f_1, f_2 not regular
  CHECK_THROWS_AS(analyze(aci_system(Ps({"x0^2", "x1*x2", "x1*x0"}, 3))), HypothesisError);
  // Artinian: dim 0
  CHECK_THROWS_AS(analyze(aci_system(Ps({"x0^2", "x1^2", "x2^2"}, 3))), HypothesisError);
  // smooth curve: the Jacobian ideal is Artinian
  CHECK_THROWS_AS(run(P("x0^3 + x1^3 + x2^3", 3)), HypothesisError);
}

TEST_CASE("duality on B/(l) and the surjectivity criterion") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 4; ++i) {
    auto sys = aci_system(random_aci(PrimeField(), 2, 4, rng));
    auto l = sample_regular_forms(sys, 1, rng).front();
    for (const auto& r : duality_checks(sys, l)) {
      CAPTURE(r.p);
      CHECK(r.duality_holds());
      CHECK(r.m1_surjectivity_holds());
      CHECK(r.m1_injectivity_holds());
    }
  }
}

TEST_CASE("Lefschetz elements: complete intersections yes, a known failure no") {
  std::mt19937_64 rng(5);
  CHECK(has_lefschetz_element(PrimeField(), 3, std::span<const Polynomial<PrimeField>>(Ps({"x0^2", "x1^3", "x2^3"}, 3)),
                              5, rng));
  // (x^3, y^3, z^3, xyz) fails the weak Lefschetz property from degree 2 to 3
  auto bad = Ps({"x0^3", "x1^3", "x2^3", "x0*x1*x2"}, 3);
  CHECK_FALSE(has_lefschetz_element(PrimeField(), 3, std::span<const Polynomial<PrimeField>>(bad), 5, rng));
}

TEST_CASE("random Jacobian curves agree with the oracle") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 4; ++i) {
    auto f = random_singular_curve(PrimeField(), 4 + i % 2, rng);
    CAPTURE(f.to_string());
    auto rep = run(f, false);
    CHECK(rep.st <= 3 * (f.degree() - 2) + 1);
    agrees_with_oracle(f, rep, rep.st + 2);
  }
}

TEST_CASE("random ACI corpus: seed determinism and postconditions") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 5; ++i) {
    auto fa = random_aci(PrimeField(), 2, 4, a);
    auto fb = random_aci(PrimeField(), 2, 4, b);
    CHECK(fa == fb);
    auto sys = aci_system(fa);
    CHECK(is_regular_sequence(sys.field, sys.nvars, sys.regular_part()));
    CHECK(krull_dimension_of_quotient(Ideal<PrimeField>(sys.field, 3, fa)) == 1);
  }
}

TEST_CASE("rational and GF(p) reports agree on a corpus instance") {
  std::mt19937_64 a(9), b(9);
  auto q = random_aci(RationalField(), 2, 4, a);
  auto p = random_aci(PrimeField(), 2, 4, b);
  AnalyzeOptions opt;
  opt.lefschetz = false;
  auto rq = analyze(aci_system(q), opt);
  auto rp = analyze(aci_system(p), opt);
  CHECK(rq.G == rp.G);
  CHECK(rq.F == rp.F);
  CHECK(rq.mdr == rp.mdr);
  CHECK(rq.ci_type == rp.ci_type);
}
