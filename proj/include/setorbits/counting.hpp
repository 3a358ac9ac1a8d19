#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "setorbits/bigcount.hpp"
#include "setorbits/bsgs.hpp"
#include "setorbits/permutation.hpp"

namespace setorbits {

/// Census of cycle types over all elements of a group.
struct CycleIndex {
  std::size_t degree = 0;
  std::map<CycleType, BigCount> terms;
  BigCount group_order;

  /// Checks both invariants (term counts sum to the order, every type sums to the degree).
  void validate() const;
};

/// A partition of n with its block count B and symmetry factor F.
struct PartitionRecord {
  std::vector<int> parts;  // weakly decreasing
  int block_count = 0;     // B(π): number of parts
  BigCount symmetry_factor;  // F(π): product of factorials of part multiplicities

  static PartitionRecord from_parts(std::vector<int> parts);
  int total() const;
  std::string str() const;  // "3,3,2,1,1,1,1"
};

struct SetOrbitCount {
  BigCount value;
  BigCount group_order;
  std::size_t degree = 0;
};

/// Progress callback: (branches finished, total branches).
using ProgressFn = std::function<void(std::size_t, std::size_t)>;

/// Exact cycle-type census by full element enumeration, split across
/// `workers` threads by top-level coset. The result does not depend on the
/// worker count. Supports degree ≤ 64.
CycleIndex cycle_index(const StrongGenSet& group, unsigned workers = 1,
                       const ProgressFn& progress = {});

/// Burnside: (1/|G|) Σ_g 2^{c(g)}.
SetOrbitCount set_orbit_count(const CycleIndex& ci);

/// Number of arrangements of content π fixed by an element of the given cycle
/// type: ways to colour its cycles so colour i covers exactly π_i points.
BigCount fixed_arrangements(const CycleType& type, const PartitionRecord& partition);

/// Orbits on arrangements (words over B(π) distinguishable colours, colour i
/// used π_i times) by Burnside over the cycle index.
BigCount multiset_orbit_count(const CycleIndex& ci, const PartitionRecord& partition);

/// All partitions of n in reverse-lexicographic order, (n) first.
std::vector<PartitionRecord> partitions_of(int n);

struct BruteForceBudget {
  std::size_t max_degree_sets = 20;
  BigCount max_order_sets = 1'000'000;
  std::size_t max_degree_arrangements = 12;
  BigCount max_arrangements = 50'000'000;
};

/// Orbits on subsets by explicit marking: scan masks in increasing order, each
/// unmarked mask is an orbit minimum whose orbit is then marked by BFS under
/// the strong generators. Independent of the cycle index.
BigCount brute_force_set_orbits(const StrongGenSet& group, const BruteForceBudget& budget = {});

/// Orbits on arrangements of content π by explicit marking over ranked words.
BigCount brute_force_multiset_orbits(const StrongGenSet& group, const PartitionRecord& partition,
                                     const BruteForceBudget& budget = {});

}  // namespace setorbits
