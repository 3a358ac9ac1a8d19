#include "setorbits/bsgs.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace setorbits {
namespace {

std::optional<Point> first_moved_point(const Permutation& p) {
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (p[i] != i) return static_cast<Point>(i);
  }
  return std::nullopt;
}

void rebuild_orbit(StrongGenSet::Level& level, std::size_t degree) {
  level.orbit.assign(1, level.base_point);
  level.orbit_index.assign(degree, -1);
  level.orbit_index[level.base_point] = 0;
  level.transversal.assign(1, Permutation::identity(degree));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const auto& s : level.generators) {
      const Point image = s[level.orbit[k]];
      if (level.orbit_index[image] >= 0) continue;
      level.orbit_index[image] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(image);
      // (s ∘ u_b) maps the base point to s(b).
      level.transversal.push_back(compose(s, level.transversal[k]));
    }
  }
  level.inverse_transversal.clear();
  for (const auto& u : level.transversal) level.inverse_transversal.push_back(u.inverse());
}

struct SiftResult {
  Permutation residue;
  std::size_t failed_level;  // == levels.size() when every orbit test passed
};

SiftResult sift(const std::vector<StrongGenSet::Level>& levels, Permutation g, std::size_t from) {
  for (std::size_t i = from; i < levels.size(); ++i) {
    const int index = levels[i].orbit_index[g[levels[i].base_point]];
    if (index < 0) return {std::move(g), i};
    g = compose(levels[i].inverse_transversal[index], g);
  }
  return {std::move(g), levels.size()};
}

}  // namespace

StrongGenSet StrongGenSet::build(std::span<const Permutation> generators) {
  if (generators.empty()) throw std::invalid_argument("schreier_sims: no generators");
  StrongGenSet out;
  out.degree_ = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != out.degree_) {
      throw std::invalid_argument("schreier_sims: generator degree mismatch");
    }
  }
  out.input_generators_.assign(generators.begin(), generators.end());
  const std::size_t n = out.degree_;
  auto& levels = out.levels_;

  auto add_level = [&](Point base_point) {
    Level level;
    level.base_point = base_point;
    levels.push_back(std::move(level));
    rebuild_orbit(levels.back(), n);
  };
  auto fixes_base_prefix = [&](const Permutation& g, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      if (g[levels[i].base_point] != levels[i].base_point) return false;
    }
    return true;
  };

  // Initial base: every non-identity generator must move some base point.
  std::vector<Permutation> initial;
  for (const auto& g : generators) {
    if (g.is_identity()) continue;
    if (fixes_base_prefix(g, levels.size())) add_level(*first_moved_point(g));
    initial.push_back(g);
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (const auto& g : initial) {
      if (fixes_base_prefix(g, i)) levels[i].generators.push_back(g);
    }
    rebuild_orbit(levels[i], n);
  }

  // Holt's SCHREIERSIMS: verify level i assuming levels > i are complete.
  std::size_t i = levels.size();
  while (i > 0) {
    const std::size_t level_index = i - 1;
    bool extended = false;
    std::size_t restart_level = 0;
    for (std::size_t k = 0; !extended && k < levels[level_index].orbit.size(); ++k) {
      for (std::size_t gi = 0; !extended && gi < levels[level_index].generators.size(); ++gi) {
        const auto& s = levels[level_index].generators[gi];
        const Point image = s[levels[level_index].orbit[k]];
        const int j = levels[level_index].orbit_index[image];
        Permutation schreier = compose(levels[level_index].inverse_transversal[j],
                                       compose(s, levels[level_index].transversal[k]));
        auto [residue, failed] = sift(levels, std::move(schreier), level_index + 1);
        if (failed == levels.size() && residue.is_identity()) continue;
        if (failed == levels.size()) add_level(*first_moved_point(residue));
        for (std::size_t l = level_index + 1; l <= failed && l < levels.size(); ++l) {
          levels[l].generators.push_back(residue);
          rebuild_orbit(levels[l], n);
        }
        extended = true;
        restart_level = std::min(failed, levels.size() - 1) + 1;
      }
    }
    i = extended ? restart_level : i - 1;
  }

  for (const auto& level : levels) {
    for (const auto& g : level.generators) {
      if (std::find(out.strong_generators_.begin(), out.strong_generators_.end(), g) ==
          out.strong_generators_.end()) {
        out.strong_generators_.push_back(g);
      }
    }
  }
  return out;
}

std::vector<Point> StrongGenSet::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

BigCount StrongGenSet::order() const {
  BigCount out = 1;
  for (const auto& level : levels_) out *= static_cast<unsigned long>(level.orbit.size());
  return out;
}

bool StrongGenSet::contains(const Permutation& p) const {
  if (p.degree() != degree_) {
    throw std::invalid_argument("contains: degree mismatch (" + std::to_string(p.degree()) +
                                " vs " + std::to_string(degree_) + ")");
  }
  auto [residue, failed] = sift(levels_, p, 0);
  return failed == levels_.size() && residue.is_identity();
}

std::size_t StrongGenSet::top_branch_count() const {
  return levels_.empty() ? 1 : levels_[0].transversal.size();
}

void StrongGenSet::enumerate_elements(const std::function<void(const Permutation&)>& visit) const {
  for_each_element([&](std::span<const Point> images) {
    visit(Permutation(std::vector<Point>(images.begin(), images.end())));
  });
}

StrongGenSet schreier_sims(std::span<const Permutation> generators) {
  return StrongGenSet::build(generators);
}

}  // namespace setorbits
