#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "setorbits/bigcount.hpp"
#include "setorbits/permutation.hpp"

namespace setorbits {

/// Base and strong generating set built by deterministic Schreier–Sims.
///
/// Level i stabilises base points 0..i-1 pointwise and stores the orbit of
/// base point i together with coset representatives u_b (u_b maps the base
/// point to b). Every element factors uniquely as u^(0) ∘ u^(1) ∘ ... ∘ u^(k-1).
/// Immutable after construction.
class StrongGenSet {
public:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;    // strong generators fixing earlier base points
    std::vector<Point> orbit;               // orbit of base_point, discovery order
    std::vector<int> orbit_index;           // point -> index into orbit, -1 if absent
    std::vector<Permutation> transversal;   // transversal[k] maps base_point to orbit[k]
    std::vector<Permutation> inverse_transversal;
  };

  /// Runs Schreier–Sims on `generators` (must be non-empty, equal degrees).
  static StrongGenSet build(std::span<const Permutation> generators);

  std::size_t degree() const { return degree_; }
  std::vector<Point> base() const;
  const std::vector<Level>& levels() const { return levels_; }
  const std::vector<Permutation>& strong_generators() const { return strong_generators_; }
  /// Generators the group was built from.
  const std::vector<Permutation>& generators() const { return input_generators_; }

  BigCount order() const;
  bool contains(const Permutation& p) const;

  /// Size of the top-level transversal: the unit of work for parallel enumeration.
  std::size_t top_branch_count() const;

  /// Visits every group element exactly once as an image table, depth first
  /// over the transversal chain with one composition per visited node.
  template <typename Visitor>
  void for_each_element(Visitor&& visit) const {
    for (std::size_t b = 0; b < top_branch_count(); ++b) for_each_element_in_branch(b, visit);
  }

  /// Visits the elements whose top-level transversal factor is the `branch`-th one.
  template <typename Visitor>
  void for_each_element_in_branch(std::size_t branch, Visitor&& visit) const;

  /// Calls `visit` with a Permutation (convenience wrapper, allocates per element).
  void enumerate_elements(const std::function<void(const Permutation&)>& visit) const;

private:
  std::size_t degree_ = 0;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_generators_;
  std::vector<Permutation> input_generators_;

  template <typename Visitor>
  void descend(std::size_t depth, std::vector<std::vector<Point>>& prefixes, Visitor& visit) const;
};

StrongGenSet schreier_sims(std::span<const Permutation> generators);

template <typename Visitor>
void StrongGenSet::for_each_element_in_branch(std::size_t branch, Visitor&& visit) const {
  std::vector<std::vector<Point>> prefixes(levels_.size() + 1, std::vector<Point>(degree_));
  if (levels_.empty()) {
    for (std::size_t i = 0; i < degree_; ++i) prefixes[0][i] = static_cast<Point>(i);
    visit(std::span<const Point>(prefixes[0]));
    return;
  }
  const auto top = levels_[0].transversal[branch].images();
  std::copy(top.begin(), top.end(), prefixes[1].begin());
  descend(1, prefixes, visit);
}

template <typename Visitor>
void StrongGenSet::descend(std::size_t depth, std::vector<std::vector<Point>>& prefixes,
                           Visitor& visit) const {
  const Point* prefix = prefixes[depth].data();
  if (depth == levels_.size()) {
    visit(std::span<const Point>(prefixes[depth]));
    return;
  }
  Point* next = prefixes[depth + 1].data();
  const std::size_t n = degree_;
  for (const auto& u : levels_[depth].transversal) {
    const Point* images = u.images().data();
    for (std::size_t i = 0; i < n; ++i) next[i] = prefix[images[i]];
    descend(depth + 1, prefixes, visit);
  }
}

}  // namespace setorbits
