#include "doctest.h"

#include "aci/graded.hpp"
#include "aci/hilbert.hpp"
#include "aci/ideal_ops.hpp"
#include "helpers.hpp"

using namespace aci;
using testing_util::I;
using testing_util::P;
using testing_util::Ps;

TEST_CASE("standard monomials of S/(x0*x1, x1^3)") {
  QuotientRing<PrimeField> r(reduced_groebner(I({"x0*x1", "x1^3"}, 2)), 5);
  REQUIRE(r.dim(2) == 2);
  CHECK(r.standard(2)[0] == Monomial{2, 0});
  CHECK(r.standard(2)[1] == Monomial{0, 2});
  CHECK(r.dim(3) == 1);
}

TEST_CASE("normal form tables agree with division") {
  auto gb = reduced_groebner(I({"x0^2 - x1*x2", "x1^2 - x0*x2 + x2^2"}, 3));
  QuotientRing<PrimeField> r(gb, 6);
  for (int k = 0; k <= 6; ++k)
    for (const auto& m : monomial_basis(3, k)) {
      auto f = Polynomial<PrimeField>::monomial(PrimeField(), 3, m, 1);
      CHECK(r.polynomial(r.normal_form(m), k) == normal_form(f, gb));
    }
}

TEST_CASE("subquotient of equal ideals is zero") {
  auto gb = reduced_groebner(I({"x0*x1", "x1^3"}, 2));
  GradedModule<PrimeField> n(gb, gb, 6);
  for (int k = 0; k <= 6; ++k) CHECK(n.dim(k) == 0);
}

TEST_CASE("subquotient dimensions are differences of Hilbert functions") {
  auto j = reduced_groebner(I({"x0*x1", "x1^3"}, 2));
  auto sat = saturate_irrelevant(j.ideal());
  GradedModule<PrimeField> n(sat, j, 6);
  auto hj = hilbert_series(j), hi = hilbert_series(sat);
  for (int k = 0; k <= 6; ++k)
    CHECK(static_cast<std::int64_t>(n.dim(k)) == hilbert_function(hj, k) - hilbert_function(hi, k));
}

TEST_CASE("multiplication maps") {
  auto j = reduced_groebner(I({"x0*x1", "x1^3"}, 2));
  GradedModule<PrimeField> m(j, 6);
  auto id = multiplication_map(m, P("1", 2), 3);
  CHECK(id.rank == m.dim(3));
  CHECK(id.injective());
  CHECK(id.surjective());
  // x1: (S/J)_1 -> (S/J)_2 sends x0 to 0 and x1 to x1^2
  auto x1 = multiplication_map(m, P("x1", 2), 1);
  CHECK(x1.rank == 1);
  CHECK_FALSE(x1.injective());
  auto zero = multiplication_map(m, P("0", 2), 1, 2);
  CHECK(zero.rank == 0);
  CHECK(zero.target_degree == 3);
}

TEST_CASE("relation degree for (x0*x1, x1^3)") {
  auto fs = Ps({"x0*x1", "x1^3"}, 2);
  CHECK(relation_min_degree(std::span<const Polynomial<PrimeField>>(fs), 2) == 4);
}

TEST_CASE("cayley-bacharach count for (x0*x1, x1^3)") {
  auto fs = Ps({"x0*x1", "x1^3"}, 2);
  // s = 3 - 1 - 1 = 1, F = 1
  CHECK(cayley_bacharach_failure(std::span<const Polynomial<PrimeField>>(fs), 0) == 0);
  CHECK(cayley_bacharach_failure(std::span<const Polynomial<PrimeField>>(fs), 1) == 0);
  CHECK_THROWS(cayley_bacharach_failure(std::span<const Polynomial<PrimeField>>(fs), 2));
}
