#include "doctest.h"

#include "aci/groebner.hpp"
#include "aci/hilbert.hpp"
#include "aci/ideal_ops.hpp"
#include "helpers.hpp"

using namespace aci;
using testing_util::I;
using testing_util::P;

TEST_CASE("monomial ideal is its own basis") {
  auto gb = reduced_groebner(I({"x0*x1", "x1^3"}, 2));
  REQUIRE(gb.elements().size() == 2);
  CHECK(gb.elements()[0] == P("x0*x1", 2));
  CHECK(gb.elements()[1] == P("x1^3", 2));
}

TEST_CASE("linear forms row reduce") {
  auto gb = reduced_groebner(I({"x0", "x0 + x1"}, 2));
  REQUIRE(gb.elements().size() == 2);
  CHECK(gb == reduced_groebner(I({"x0", "x1"}, 2)));
}

TEST_CASE("normal forms against (x0*x1, x1^3)") {
  auto gb = reduced_groebner(I({"x0*x1", "x1^3"}, 2));
  CHECK(normal_form(P("x1^3", 2), gb).is_zero());
  CHECK(normal_form(P("x0^5", 2), gb) == P("x0^5", 2));
  CHECK(normal_form(P("x0^2*x1^2", 2), gb).is_zero());
}

TEST_CASE("basis does not depend on generator order or scaling") {
  auto a = reduced_groebner(I({"x0^2 - x1*x2", "x1^2 - x0*x2", "x2^2 - x0*x1"}, 3));
  auto b = reduced_groebner(I({"3*x2^2 - 3*x0*x1", "x1^2 - x0*x2", "-x0^2 + x1*x2"}, 3));
  CHECK(a == b);
  auto gens = I({"x0^2 - x1*x2", "x1^2 - x0*x2", "x2^2 - x0*x1"}, 3);
  for (const auto& g : gens.generators()) CHECK(a.contains(g));
}

TEST_CASE("ideal quotients") {
  auto q = ideal_quotient(I({"x0*x1", "x1^3"}, 2), P("x1", 2));
  CHECK(q == reduced_groebner(I({"x0", "x1^2"}, 2)));
  auto j = I({"x0*x1", "x1^3"}, 2);
  CHECK(ideal_quotient(j, P("1", 2)) == reduced_groebner(j));
  CHECK(ideal_quotient(I({"x1^3"}, 2), P("x0*x1", 2)) == reduced_groebner(I({"x1^2"}, 2)));
  CHECK_THROWS(ideal_quotient(j, P("0", 2)));
}

TEST_CASE("intersection of monomial ideals") {
  auto c = intersect(I({"x0^2", "x1"}, 2), I({"x0", "x1^2"}, 2));
  CHECK(c == reduced_groebner(I({"x0^2", "x0*x1", "x1^2"}, 2)));
}

TEST_CASE("saturation") {
  auto s = saturate_irrelevant(I({"x0*x1", "x1^3"}, 2));
  CHECK(s == reduced_groebner(I({"x1"}, 2)));
  CHECK(saturate_irrelevant(I({"x1"}, 2)) == s);
  CHECK(saturate_irrelevant(s.ideal()) == s);
}

TEST_CASE("krull dimension") {
  CHECK(krull_dimension_of_quotient(I({"x0*x1", "x1^3"}, 2)) == 1);
  CHECK(krull_dimension_of_quotient(I({"x0", "x1"}, 2)) == 0);
  CHECK_THROWS(krull_dimension_of_quotient(I({"1"}, 2)));
}

TEST_CASE("regular sequences") {
  auto one = testing_util::Ps({"x1^3"}, 2);
  CHECK(is_regular_sequence(testing_util::gf(), 2, std::span<const Polynomial<PrimeField>>(one)));
  auto two = testing_util::Ps({"x0*x1", "x0*x2"}, 3);
  CHECK_FALSE(is_regular_sequence(testing_util::gf(), 3, std::span<const Polynomial<PrimeField>>(two)));
}

TEST_CASE("minimal generator degrees") {
  CHECK(minimal_generator_degrees(reduced_groebner(I({"x1"}, 2))) == std::vector<int>{1});
  CHECK(minimal_generator_degrees(reduced_groebner(I({"x0^2", "x0*x1", "x1^2"}, 2))) == std::vector<int>{2, 2, 2});
  // x1^3 = (x0^3 + x1^3) - x0*x0^2 makes x1^4 redundant
  CHECK(minimal_generator_degrees(reduced_groebner(I({"x0^2", "x0^3 + x1^3", "x1^4"}, 2))) == std::vector<int>{2, 3});
}
