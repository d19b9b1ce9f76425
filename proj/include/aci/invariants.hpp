#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "aci/graded.hpp"
#include "aci/hilbert.hpp"
#include "aci/linear_change.hpp"

namespace aci {

/// The input violates dim S/J = 1 or regularity of f_1..f_n.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagree.
class IdentityMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f_0..f_n with nominal degrees. A zero f_0 (a cone in the variable x_0)
/// keeps the degree it would have had.
template <Field K>
struct AciSystem {
  K field;
  int nvars = 0;
  std::vector<Polynomial<K>> fs;
  std::vector<int> degrees;
  /// Set for Jacobian input: f itself, after any coordinate change.
  std::optional<Polynomial<K>> hypersurface;
  std::optional<LinearChange<K>> change;

  int n() const { return nvars - 1; }
  int degree_sum() const;
  /// s = sum_{i>=1} d_i - n - 1
  int s() const { return degree_sum() - degrees[0] - n() - 1; }
  /// q = sum_{i>=1} (d_i - 1) = s + 1
  int q() const { return s() + 1; }
  std::span<const Polynomial<K>> regular_part() const { return std::span<const Polynomial<K>>(fs).subspan(1); }
};

/// Explicit f_0..f_n; requires n + 1 = nvars and f_1..f_n nonzero forms.
template <Field K>
AciSystem<K> aci_system(std::vector<Polynomial<K>> fs);

/// Partials of f. When f_1..f_n is not regular a random change of
/// coordinates is applied, up to 5 times.
template <Field K>
AciSystem<K> jacobian_ideal(const Polynomial<K>& f, std::mt19937_64& rng);

/// Coefficients uniform in GF(p); integers in [-100, 100] over Q.
template <Field K>
Polynomial<K> random_linear_form(const K& field, int nvars, std::mt19937_64& rng);

/// Linear forms regular on B = S/(f_1..f_n). Draws up to 4 * count forms.
template <Field K>
std::vector<Polynomial<K>> sample_regular_forms(const AciSystem<K>& sys, int count, std::mt19937_64& rng);

struct LefschetzRow {
  int k = 0;
  std::size_t dim_source = 0;
  std::size_t dim_target = 0;
  std::size_t rank = 0;
  bool injective() const { return rank == dim_source; }
  bool surjective() const { return rank == dim_target; }
};

struct LefschetzProfile {
  /// T = sum d_i - n - 1 (3d - 6 for plane curves), i0 = floor(T / 2).
  int top = 0;
  int i0 = 0;
  std::vector<LefschetzRow> rows;
  std::vector<LefschetzRow> m_rows;
  std::vector<std::size_t> n_k;
  bool unimodal = false;
  bool symmetric = false;
  /// Injective on N for i < T/2 and surjective for i >= i0.
  bool windows_hold = false;
  bool m_injective_below = false;
  bool m_surjective_from_i0 = false;
  /// i0 >= deg F
  bool m_surjective_predicted = false;
  int trials = 0;
};

struct IntVerdict {
  bool holds = false;
  std::int64_t slack = 0;
};

struct RationalVerdict {
  bool holds = false;
  mpq_class slack;
};

struct InvariantReport {
  int n = 0;
  std::vector<int> degrees;
  std::optional<int> d;
  IntPoly G;
  IntPoly F;
  std::int64_t tau = 0;
  int st = 0;
  int deg_F = 0;
  std::optional<int> ct;
  int mdr = 0;
  int relation_degree = 0;
  std::optional<std::vector<int>> ci_type;
  bool saturated_equals_jacobian = false;
  std::optional<LefschetzProfile> lefschetz;
  IntVerdict c1;
  std::optional<RationalVerdict> c2;
  std::optional<int> assumption_A_max_k;
  bool cone = false;
  std::vector<std::string> cone_witness;
  std::optional<std::string> linear_change;
};

struct AnalyzeOptions {
  std::uint64_t seed = 0;
  int trials = 5;
  bool lefschetz = true;
  std::optional<mpq_class> alpha;
};

/// Full pipeline. Throws HypothesisError or IdentityMismatch.
template <Field K>
InvariantReport analyze(const AciSystem<K>& sys, const AnalyzeOptions& options = {});

/// Generic-rank profile of l on N = I/J and M = S/J.
template <Field K>
LefschetzProfile lefschetz_profile(const AciSystem<K>& sys, const GroebnerBasis<K>& j, const GroebnerBasis<K>& i,
                                   const IntPoly& F, int st, std::span<const Polynomial<K>> forms);

struct AssumptionA {
  std::optional<int> max_k;
  IntPoly L;
  /// deg L <= q - k - 1 for the returned k (vacuous when absent).
  bool bound_holds = true;
};

/// Largest k in [0, q) with f_0: (B/(l))_k -> (B/(l))_{k+d_0} injective.
template <Field K>
AssumptionA assumption_A_max_k(const AciSystem<K>& sys, const Polynomial<K>& l);

struct DualityRecord {
  int p = 0;
  bool f0_surjective = false;       // (B/(l))_{p-d0} -> (B/(l))_p
  bool f0_injective_dual = false;   // (B/(l))_{q-p} -> (B/(l))_{q-p+d0}
  bool l_surjective = false;        // M_{p-1} -> M_p
  bool f0_injective = false;        // (B/(l))_p -> (B/(l))_{p+d0}
  bool l_injective_shifted = false; // M_{p+d0-1} -> M_{p+d0}
  bool duality_holds() const { return f0_surjective == f0_injective_dual; }
  bool m1_surjectivity_holds() const { return f0_surjective == l_surjective; }
  bool m1_injectivity_holds() const { return !f0_injective || l_injective_shifted; }
};

/// Records for p in [0, q + d_0 + 1] with one fixed l.
template <Field K>
std::vector<DualityRecord> duality_checks(const AciSystem<K>& sys, const Polynomial<K>& l);

struct ConeCheck {
  bool cone = false;
  /// Coefficients c with sum c_i f_i = 0, as field strings.
  std::vector<std::string> witness;
};

/// Jacobian input: the partials are linearly dependent. Otherwise f_0 lies in
/// the span of f_1..f_n.
template <Field K>
ConeCheck cone_check(const AciSystem<K>& sys);

/// Maximal rank of l on every A_k -> A_{k+1} of an Artinian S/(fs), for some
/// sampled l.
template <Field K>
bool has_lefschetz_element(const K& field, int nvars, std::span<const Polynomial<K>> fs, int trials,
                           std::mt19937_64& rng);

/// n = 1, height-one pair with d_0 < d_1: some sampled l satisfies the
/// injectivity/surjectivity ranges and is a Lefschetz element for S/(f_0, f_1).
template <Field K>
bool n1_lefschetz_holds(const AciSystem<K>& sys, int trials, std::mt19937_64& rng);

}  // namespace aci
