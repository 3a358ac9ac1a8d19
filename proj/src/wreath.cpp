#include "setorbits/wreath.hpp"

#include <stdexcept>

namespace setorbits {

BigCount wreath_set_orbits(const BigCount& base_count, const CycleIndex& top) {
  if (base_count < 1) throw std::invalid_argument("wreath_set_orbits: s must be >= 1");
  BigCount sum = 0;
  for (const auto& [type, count] : top.terms) {
    BigCount power;
    mpz_pow_ui(power.get_mpz_t(), base_count.get_mpz_t(), type.cycle_count());
    sum += count * power;
  }
  return exact_div(sum, top.group_order, "wreath Burnside sum");
}

BigCount wreath_set_orbits_partitionwise(const BigCount& base_count, int top_degree,
                                         const std::map<std::vector<int>, BigCount>& orbit_table) {
  if (base_count < 1) throw std::invalid_argument("wreath_set_orbits_partitionwise: s must be >= 1");
  BigCount total = 0;
  for (const auto& partition : partitions_of(top_degree)) {
    auto it = orbit_table.find(partition.parts);
    if (it == orbit_table.end()) {
      throw std::invalid_argument("orbit table has no entry for partition " + partition.str());
    }
    const BigCount labelled = it->second * falling_factorial(base_count, partition.block_count);
    total += exact_div(labelled, partition.symmetry_factor, "partition term " + partition.str());
  }
  return total;
}

std::vector<Permutation> wreath_product_generators(const std::vector<Permutation>& base,
                                                   const std::vector<Permutation>& top) {
  if (base.empty() || top.empty()) throw std::invalid_argument("wreath product needs generators");
  const std::size_t h = base.front().degree();
  const std::size_t m = top.front().degree();
  if (h * m > kMaxDegree) throw std::invalid_argument("wreath product degree too large");
  std::vector<Permutation> out;
  for (const auto& g : base) {
    if (g.degree() != h) throw std::invalid_argument("wreath product: base degree mismatch");
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<Point> images(h * m);
      for (std::size_t i = 0; i < h * m; ++i) images[i] = static_cast<Point>(i);
      for (std::size_t x = 0; x < h; ++x) images[b * h + x] = static_cast<Point>(b * h + g[x]);
      out.emplace_back(std::move(images));
    }
  }
  for (const auto& t : top) {
    if (t.degree() != m) throw std::invalid_argument("wreath product: top degree mismatch");
    std::vector<Point> images(h * m);
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < h; ++x) images[b * h + x] = static_cast<Point>(t[b] * h + x);
    }
    out.emplace_back(std::move(images));
  }
  return out;
}

BigCount tower_count(const BigCount& s0, int k) {
  if (k < 0) throw std::invalid_argument("tower_count: k must be >= 0");
  BigCount s = s0;
  for (int i = 0; i < k; ++i) s = binomial(s + 3, 4);
  return s;
}

std::vector<SequenceTerm> sequence_terms(const BigCount& base_s, int base_degree,
                                         const BigCount& s0, int top_degree, int k_max,
                                         mpfr_prec_t precision) {
  if (k_max < 0) throw std::invalid_argument("sequence_terms: k_max must be >= 0");
  std::vector<SequenceTerm> out;
  auto push = [&](int k, const BigCount& s, const BigCount& n) {
    SequenceTerm term;
    term.k = k;
    term.s = s;
    term.degree = n;
    term.a = Enclosure::log2(s, precision) / Enclosure::exact(n, precision);
    out.push_back(std::move(term));
  };
  push(-1, base_s, base_degree);
  BigCount s = s0;
  BigCount n = BigCount(base_degree) * top_degree;
  for (int k = 0; k <= k_max; ++k) {
    push(k, s, n);
    s = binomial(s + 3, 4);
    n *= 4;
  }
  return out;
}

Enclosure limit_enclosure(const BigCount& s0, int n0, int k, mpfr_prec_t precision) {
  const BigCount s = tower_count(s0, k);
  BigCount n = n0;
  for (int i = 0; i < k; ++i) n *= 4;
  const auto degree = Enclosure::exact(n, precision);
  // Tail of the log-folded recurrence: Σ_{j>k} log2(24)/n_j = log2(24)/(3 n_k).
  const auto tail = Enclosure::log2(24, precision) / (Enclosure::exact(3, precision) * degree);
  const auto lower = Enclosure::log2(s, precision) / degree - tail;
  const auto upper = Enclosure::log2(s + 3, precision) / degree - tail;
  return hull(lower, upper);
}

}  // namespace setorbits
