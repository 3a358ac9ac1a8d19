#pragma once

#include <map>
#include <vector>

#include "setorbits/bigcount.hpp"
#include "setorbits/counting.hpp"
#include "setorbits/enclosure.hpp"
#include "setorbits/permutation.hpp"

namespace setorbits {

/// Set-orbit count of H ≀ T from s = s(H) and the cycle index of T:
/// (1/|T|) Σ_t s^{c(t)}, the number of T-orbits of maps blocks → s classes.
BigCount wreath_set_orbits(const BigCount& base_count, const CycleIndex& top);

/// Same count by summing over arrangement contents:
/// Σ_π N(π) · s(s-1)…(s-B(π)+1) / F(π). `orbit_table` must cover every
/// partition of the top degree.
BigCount wreath_set_orbits_partitionwise(const BigCount& base_count, int top_degree,
                                         const std::map<std::vector<int>, BigCount>& orbit_table);

/// Generators of the imprimitive wreath product H ≀ T on deg(H)·deg(T) points;
/// block b holds points b·deg(H) .. b·deg(H)+deg(H)-1.
std::vector<Permutation> wreath_product_generators(const std::vector<Permutation>& base,
                                                   const std::vector<Permutation>& top);

struct SequenceTerm {
  int k = 0;             // -1 for the base group
  BigCount s;            // s_k
  BigCount degree;       // n_k
  Enclosure a;           // log2(s_k) / n_k
};

/// Terms k = -1..k_max of s_{-1} = base_s, s_0 = s0, s_{k+1} = C(s_k + 3, 4),
/// with degrees n_{-1} = base_degree, n_k = top_degree · base_degree · 4^k.
std::vector<SequenceTerm> sequence_terms(const BigCount& base_s, int base_degree,
                                         const BigCount& s0, int top_degree, int k_max,
                                         mpfr_prec_t precision = kDefaultPrecisionBits);

/// Two-sided enclosure of lim a_k from the k-th term:
///   lo = log2(s_k)/n_k − log2(24)/(3 n_k),  hi = log2(s_k + 3)/n_k − log2(24)/(3 n_k).
Enclosure limit_enclosure(const BigCount& s0, int n0, int k,
                          mpfr_prec_t precision = kDefaultPrecisionBits);

/// s_k for k ≥ 0 from s_0 by the C(s + 3, 4) recurrence.
BigCount tower_count(const BigCount& s0, int k);

}  // namespace setorbits
