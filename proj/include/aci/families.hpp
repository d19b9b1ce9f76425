#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "aci/invariants.hpp"
#include "aci/polynomial.hpp"

namespace aci {

/// Closed-form values a family promises; only what the formulas give.
struct Prediction {
  std::optional<std::int64_t> tau;
  std::optional<int> ct;
  std::optional<int> st;
  std::optional<int> mdr;
  std::optional<std::vector<int>> ci_type;
  std::optional<mpq_class> alpha;
  std::optional<bool> saturated_equals_jacobian;
  std::optional<bool> m_surjective_from_i0;
  std::optional<bool> cone;
  std::vector<std::string> notes;
};

/// Either a hypersurface f or an explicit system f_0..f_n.
template <Field K>
struct FamilyInstance {
  std::string name;
  std::string params;
  std::optional<Polynomial<K>> f;
  std::vector<Polynomial<K>> fs;
  Prediction predicted;
};

/// f = sum_j (x_0^{b_j} -+ x_j^{b_j})^{c_j} with b_j c_j = d.
template <Field K>
FamilyInstance<K> e1_family(const K& field, int n, const std::vector<int>& b, const std::vector<int>& c,
                            bool plus_sign = false);

/// x_0^p x_1^q + x_2^d with p + q = d.
template <Field K>
FamilyInstance<K> rkl0_curve(const K& field, int p, int q, int d);

/// The two line arrangements with saturated Jacobian ideal.
template <Field K>
std::vector<FamilyInstance<K>> free_divisor_examples(const K& field);

/// f_0 = x_0 x_1, f_1 = x_1^{d_1}.
template <Field K>
FamilyInstance<K> n1_example(const K& field, int d1);

/// Plane curves whose singular scheme has length 3: collinear (type (1,3),
/// d = 4 or 5) or three non-collinear nodes (d = 3 or 4).
template <Field K>
FamilyInstance<K> three_point_curve(const K& field, int d, bool collinear);

/// f_0..f_n through a few random integer points, f_1..f_n regular and
/// dim S/J = 1. Degrees in [2, max_degree]. Integer coefficients, so the
/// same seed gives the same instance over every field.
template <Field K>
std::vector<Polynomial<K>> random_aci(const K& field, int n, int max_degree, std::mt19937_64& rng);

/// Reduced plane curve of degree d with isolated singularities, as a product
/// of random integer forms.
template <Field K>
Polynomial<K> random_singular_curve(const K& field, int d, std::mt19937_64& rng);

/// Three forms in three variables with Artinian quotient.
template <Field K>
std::vector<Polynomial<K>> random_artinian_ci(const K& field, int max_degree, std::mt19937_64& rng);

/// f_0 = h a, f_1 = h b in two variables with deg h >= 1 and d_0 < d_1 <= max_degree.
template <Field K>
std::vector<Polynomial<K>> random_height_one_pair(const K& field, int max_degree, std::mt19937_64& rng);

/// Dense form with integer coefficients in [-range, range].
template <Field K>
Polynomial<K> random_form(const K& field, int nvars, int degree, std::mt19937_64& rng, int range = 9);

/// A family reference as given on the command line.
struct FamilyArgs {
  std::string name;
  int n = 0;  // 0: taken from the length of b
  std::vector<int> b, c;
  bool plus_sign = false;
  int p = 0, q = 0, d = 0;
  int d1 = 0;
  int e = 2;
  bool collinear = true;
};

/// e1, rkl0, free, n1, three-point.
template <Field K>
FamilyInstance<K> make_family(const K& field, const FamilyArgs& args);

/// "tau: predicted 4, computed 5" lines, empty when everything promised matches.
std::vector<std::string> prediction_mismatches(const Prediction& p, const InvariantReport& r);

}  // namespace aci
