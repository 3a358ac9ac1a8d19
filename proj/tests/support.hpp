#pragma once

// Helpers and independent reference computations shared by the tests. None of
// these go through the library's BSGS, cycle index or DP code.

#include <algorithm>
#include <filesystem>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "setorbits/catalog.hpp"
#include "setorbits/permutation.hpp"

namespace testing_support {

using setorbits::BigCount;
using setorbits::Permutation;
using setorbits::Point;

inline std::filesystem::path data_dir() { return SETORBITS_DATA_DIR; }

inline const setorbits::Catalog& catalog() {
  static const setorbits::Catalog c = setorbits::load_catalog(data_dir() / "catalog.txt");
  return c;
}

inline const setorbits::OrderTable& table3() {
  static const setorbits::OrderTable t = setorbits::load_order_table(data_dir() / "table3.txt");
  return t;
}

using Images = std::vector<Point>;

inline Images apply_after(const Images& p, const Images& q) {  // p∘q
  Images r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

/// All group elements by closure under right multiplication with generators.
inline std::set<Images> closure(const std::vector<Permutation>& gens) {
  const std::size_t n = gens.front().degree();
  Images id(n);
  std::iota(id.begin(), id.end(), Point{0});
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Images y = apply_after(x, Images(g.images().begin(), g.images().end()));
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline int count_cycles(const Images& p) {
  std::vector<bool> seen(p.size());
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return cycles;
}

inline std::vector<int> cycle_lengths(const Images& p) {
  std::vector<bool> seen(p.size());
  std::vector<int> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// Orbits on subsets by union-find over all elements of an explicit group.
inline std::size_t union_find_set_orbits(const std::set<Images>& group, std::size_t n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint32_t> parent(size);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : group) {
    for (std::uint32_t mask = 0; mask < size; ++mask) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1u) image |= 1u << g[i];
      }
      const auto a = find(mask), b = find(image);
      if (a != b) parent[a] = b;
    }
  }
  std::size_t roots = 0;
  for (std::uint32_t mask = 0; mask < size; ++mask) roots += find(mask) == mask;
  return roots;
}

/// p(n) by the classic "largest part at most k" recursion.
inline long partition_count(int n, int k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  return partition_count(n, k - 1) + (k <= n ? partition_count(n - k, k) : 0);
}

/// Coefficient of x_1^{π_1}…x_B^{π_B} in Π_{cycles c} (x_1^{|c|} + … + x_B^{|c|}),
/// expanded as a polynomial map keyed by exponent vectors.
inline BigCount fixed_by_expansion(const std::vector<int>& cycles, const std::vector<int>& parts) {
  using Key = std::vector<int>;
  std::map<Key, BigCount> poly{{Key(parts.size(), 0), 1}};
  for (int len : cycles) {
    std::map<Key, BigCount> next;
    for (const auto& [key, coef] : poly) {
      for (std::size_t colour = 0; colour < parts.size(); ++colour) {
        if (key[colour] + len > parts[colour]) continue;
        Key k = key;
        k[colour] += len;
        next[k] += coef;
      }
    }
    poly = std::move(next);
  }
  auto it = poly.find(parts);
  return it == poly.end() ? BigCount(0) : it->second;
}

}  // namespace testing_support
