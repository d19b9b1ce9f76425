#pragma once

#include <span>
#include <vector>

#include "aci/groebner.hpp"

namespace aci {

/// Reduced degrevlex basis of J ∩ K, by eliminating an auxiliary variable u
/// from u*J + (1 - u)*K.
template <Field K>
GroebnerBasis<K> intersect(const Ideal<K>& a, const Ideal<K>& b);

/// Reduced degrevlex basis of (J : h), from J ∩ (h) divided by h.
template <Field K>
GroebnerBasis<K> ideal_quotient(const Ideal<K>& j, const Polynomial<K>& h);

/// (J : m^infinity), iterating J -> ∩_i (J : x_i) until the basis stabilizes.
template <Field K>
GroebnerBasis<K> saturate_irrelevant(const Ideal<K>& j);

/// Pole order at t = 1 of the Hilbert series of S/J.
template <Field K>
int krull_dimension_of_quotient(const Ideal<K>& j);

/// Homogeneous criterion: dim S/(fs) = nvars - #fs.
template <Field K>
bool is_regular_sequence(const K& field, int nvars, std::span<const Polynomial<K>> fs);

/// Degrees of a minimal homogeneous generating set, ascending, from
/// dim I_k - dim (m I)_k.
template <Field K>
std::vector<int> minimal_generator_degrees(const GroebnerBasis<K>& gb);

}  // namespace aci
