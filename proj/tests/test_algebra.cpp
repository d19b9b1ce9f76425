#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "aci/linear_change.hpp"
#include "aci/parse.hpp"
#include "aci/polynomial.hpp"
#include "helpers.hpp"

using namespace aci;
using testing_util::P;

namespace {

/// Random polynomial built from a term list, returned with the text the
/// printer should produce for it.
template <Field K>
Polynomial<K> random_poly(const K& k, int nvars, std::mt19937_64& rng, int max_terms, int max_deg) {
  std::uniform_int_distribution<int> nterms(0, max_terms), exp(0, max_deg), coeff(-20, 20);
  std::vector<typename Polynomial<K>::Term> terms;
  int count = nterms(rng);
  for (int i = 0; i < count; ++i) {
    Monomial m;
    for (int v = 0; v < nvars; ++v) m.set(v, exp(rng) / 2);
    terms.push_back({m, k.from_int(coeff(rng))});
  }
  return Polynomial<K>::from_terms(k, nvars, std::move(terms));
}

template <Field K>
Polynomial<K> random_form(const K& k, int nvars, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<typename Polynomial<K>::Term> terms;
  for (const auto& m : monomial_basis(nvars, deg)) terms.push_back({m, k.from_int(coeff(rng))});
  return Polynomial<K>::from_terms(k, nvars, std::move(terms));
}

}  // namespace

TEST_CASE("prime field axioms on samples") {
  PrimeField k;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint32_t> u(0, k.modulus() - 1);
  for (int i = 0; i < 500; ++i) {
    auto a = u(rng), b = u(rng), c = u(rng);
    CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
    CHECK(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)));
    CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
    if (a != 0) CHECK(k.mul(a, k.inv(a)) == 1);
    CHECK(k.add(a, k.neg(a)) == 0);
  }
  CHECK_THROWS_AS(k.inv(0), FieldError);
  CHECK_THROWS(PrimeField(65520));
  CHECK_THROWS(PrimeField(2));
  CHECK(k.to_string(k.from_int(-1)) == "-1");
}

TEST_CASE("rational field basics") {
  RationalField q;
  auto a = q.div(q.from_int(3), q.from_int(6));
  CHECK(q.to_string(a) == "1/2");
  CHECK_THROWS_AS(q.inv(q.zero()), FieldError);
}

TEST_CASE("monomial bases") {
  auto b = monomial_basis(2, 2);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Monomial{2, 0});
  CHECK(b[1] == Monomial{1, 1});
  CHECK(b[2] == Monomial{0, 2});
  CHECK(monomial_basis(3, 0).size() == 1);
  CHECK(monomial_basis(3, 5).size() == 21);
  CHECK(count_monomials(3, 5) == 21);
  for (const auto& m : monomial_basis(4, 3)) CHECK(m.degree() == 3);
}

TEST_CASE("degrevlex and elimination orders") {
  auto d = MonomialOrder::degrevlex();
  CHECK(d.greater(Monomial{1, 1, 0}, Monomial{1, 0, 1}));
  CHECK(d.greater(Monomial{0, 2, 0}, Monomial{1, 0, 1}));
  CHECK(d.greater(Monomial{0, 0, 3}, Monomial{2, 0, 0}));
  auto e = MonomialOrder::elimination(1);
  CHECK(e.greater(Monomial{1, 0, 0}, Monomial{0, 3, 0}));
  CHECK(e.greater(Monomial{1, 1, 0}, Monomial{1, 0, 1}));
}

TEST_CASE("parsing") {
  CHECK(P("0", 3).is_zero());
  auto f = P("x0^2*x1 - 3*x2^3", 3);
  REQUIRE(f.size() == 2);
  CHECK(f.degree() == 3);
  CHECK(f.is_homogeneous());
  CHECK(f.to_string() == "x0^2*x1 - 3*x2^3");
  CHECK(P("x1 + x0 - x1", 2) == P("x0", 2));
  CHECK(P("-2 * x0 * x0", 2) == P("-2*x0^2", 2));
  CHECK(P("1/2*x0", 2, PrimeField()) == P("32761*x0", 2));
}

TEST_CASE("parse errors") {
  auto kind = [](const char* text) {
    try {
      parse_polynomial(text, PrimeField(), 3);
    } catch (const ParseError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  CHECK(kind("x0 +") == static_cast<int>(ParseError::Kind::Syntax));
  CHECK(kind("x0^") == static_cast<int>(ParseError::Kind::Syntax));
  CHECK(kind("y") == static_cast<int>(ParseError::Kind::Syntax));
  CHECK(kind("x3") == static_cast<int>(ParseError::Kind::UnknownVariable));
  CHECK(kind("1.5*x0") == static_cast<int>(ParseError::Kind::Coefficient));
  CHECK(kind("1/65521*x0") == static_cast<int>(ParseError::Kind::Coefficient));
  CHECK(max_variable_index("x0*x12 + x3") == 12);
}

TEST_CASE("print then parse is the identity on random polynomials") {
  std::mt19937_64 rng(2024);
  PrimeField k;
  RationalField q;
  for (int i = 0; i < 1000; ++i) {
    auto f = random_poly(k, 4, rng, 8, 9);
    CHECK(parse_polynomial(f.to_string(), k, 4) == f);
  }
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(q, 3, rng, 6, 7).scaled(mpq_class(2, 7));
    CHECK(parse_polynomial(f.to_string(), q, 3) == f);
  }
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(P("x0^2*x1", 3), 0) == P("2*x0*x1", 3));
  CHECK(partial_derivative(P("x0^2*x1", 3), 2).is_zero());
  auto a = P("x0^2 - x1^2", 3), b = P("x0^2 - x2^2", 3);
  auto f = a * a + b * b;
  auto euler = P("0", 3);
  for (int i = 0; i < 3; ++i) euler = euler + P("x" + std::to_string(i), 3) * partial_derivative(f, i);
  CHECK(euler == f.scaled(PrimeField().from_int(4)));
}

TEST_CASE("arithmetic laws on random forms") {
  std::mt19937_64 rng(5);
  PrimeField k;
  for (int i = 0; i < 30; ++i) {
    auto a = random_form(k, 3, 2, rng), b = random_form(k, 3, 3, rng), c = random_form(k, 3, 1, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == 5);
    CHECK(exact_divide(a * b, b) == a);
  }
}

TEST_CASE("linear changes") {
  PrimeField k;
  auto id = LinearChange<PrimeField>::identity(k, 3);
  auto f = P("x0^3 + 2*x0*x1*x2 - x2^3", 3);
  CHECK(id.apply(f) == f);
  Matrix<PrimeField> m(2, 2, k);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 1) = 1;
  LinearChange<PrimeField> shear(m, k);
  CHECK(shear.apply(P("x0^2", 2)) == P("x0^2 + 2*x0*x1 + x1^2", 2));
  Matrix<PrimeField> singular(2, 2, k);
  singular(0, 0) = 1;
  singular(1, 0) = 1;
  CHECK_THROWS(LinearChange<PrimeField>(singular, k));

  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    auto phi = LinearChange<PrimeField>::random(k, 3, rng);
    auto a = random_form(k, 3, 2, rng), b = random_form(k, 3, 3, rng);
    CHECK(phi.apply(a * b) == phi.apply(a) * phi.apply(b));
  }
}
