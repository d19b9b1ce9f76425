#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aci/families.hpp"

namespace aci {

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Random instances; each suite has its own default when unset.
  std::optional<int> count;
  int trials = 5;
  /// Ambient n and degree cap for the random ACI corpus.
  std::optional<int> n;
  std::optional<int> max_degree;
  /// Replaces the built-in instance list where the suite supports it.
  std::optional<FamilyArgs> family;
};

struct InstanceResult {
  std::size_t index = 0;
  std::string label;
  /// Everything needed to replay the instance: the input polynomials.
  std::vector<std::string> input;
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;
  /// Conjecture violations and other reportable observations.
  std::vector<std::string> findings;
};

struct SuiteResult {
  std::string name;
  /// Conjecture screens never fail.
  bool mandatory = true;
  std::vector<InstanceResult> instances;

  std::size_t passed() const;
  std::size_t findings() const;
  bool ok() const;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite. Instances run in
/// parallel; results come back in instance order.
template <Field K>
SuiteResult run_suite(const K& field, const std::string& name, const SuiteOptions& options);

/// Instance `index` of the seeded random ACI corpus. The stream depends only
/// on (seed, n, max_degree, index).
template <Field K>
std::vector<Polynomial<K>> corpus_aci(const K& field, int n, int max_degree, std::uint64_t seed, std::size_t index);

/// Instance `index` of the seeded random plane-curve corpus, degrees 3..6.
template <Field K>
Polynomial<K> corpus_curve(const K& field, std::uint64_t seed, std::size_t index);

}  // namespace aci
