#pragma once

#include <string>
#include <vector>

#include "aci/groebner.hpp"
#include "aci/parse.hpp"

namespace testing_util {

inline aci::PrimeField gf() { return aci::PrimeField(); }

template <aci::Field K = aci::PrimeField>
aci::Polynomial<K> P(const std::string& text, int nvars, const K& field = K()) {
  return aci::parse_polynomial(text, field, nvars);
}

template <aci::Field K = aci::PrimeField>
std::vector<aci::Polynomial<K>> Ps(std::initializer_list<const char*> texts, int nvars, const K& field = K()) {
  std::vector<aci::Polynomial<K>> out;
  for (const char* t : texts) out.push_back(aci::parse_polynomial(t, field, nvars));
  return out;
}

template <aci::Field K = aci::PrimeField>
aci::Ideal<K> I(std::initializer_list<const char*> texts, int nvars, const K& field = K()) {
  return aci::Ideal<K>(field, nvars, Ps<K>(texts, nvars, field));
}

}  // namespace testing_util
