#include "setorbits/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace setorbits {

int CycleType::degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string CycleType::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > kMaxDegree) {
    throw std::invalid_argument("permutation degree must be in 1.." + std::to_string(kMaxDegree));
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw std::invalid_argument("image table is not a bijection");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree) {
    throw std::invalid_argument("permutation degree must be in 1.." + std::to_string(kMaxDegree));
  }
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

Permutation Permutation::from_images(std::span<const int> images) {
  std::vector<Point> points;
  points.reserve(images.size());
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size()) {
      throw std::invalid_argument("image out of range: " + std::to_string(v));
    }
    points.push_back(static_cast<Point>(v));
  }
  return Permutation(std::move(points));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  Permutation out = identity(degree);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad cycle notation '" + std::string(text) + "': " + why);
  };
  skip_space();
  if (pos == text.size()) fail("empty");
  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<Point> cycle;
    skip_space();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;  // "()"
      continue;
    }
    while (true) {
      skip_space();
      std::size_t value = 0;
      auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc{}) fail("expected a point");
      pos = static_cast<std::size_t>(end - text.data());
      if (value < 1 || value > degree) fail("point " + std::to_string(value) + " out of range");
      Point p = static_cast<Point>(value - 1);
      if (used[p]) fail("point " + std::to_string(value) + " repeated");
      used[p] = true;
      cycle.push_back(p);
      skip_space();
      if (pos == text.size()) fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      out.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation out = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

CycleType Permutation::cycle_type() const { return cycle_type_of(images_); }

int Permutation::sign() const {
  // A k-cycle is a product of k-1 transpositions.
  const auto type = cycle_type();
  int transpositions = type.degree() - static_cast<int>(type.cycle_count());
  return transpositions % 2 == 0 ? 1 : -1;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t j = start;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()) + ")");
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p[q[i]];
  return Permutation(std::move(images));
}

CycleType cycle_type_of(std::span<const Point> images) {
  CycleType type;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (std::size_t j = start; !seen[j]; j = images[j]) {
      seen[j] = true;
      ++length;
    }
    type.parts.push_back(length);
  }
  std::sort(type.parts.begin(), type.parts.end(), std::greater<>());
  return type;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::vector<Point>> point_orbits(std::span<const Permutation> generators,
                                             std::size_t degree) {
  std::vector<int> orbit_of(degree, -1);
  std::vector<std::vector<Point>> orbits;
  for (std::size_t start = 0; start < degree; ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<Point> orbit{static_cast<Point>(start)};
    orbit_of[start] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& g : generators) {
        Point image = g[orbit[k]];
        if (orbit_of[image] < 0) {
          orbit_of[image] = id;
          orbit.push_back(image);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

Permutation transposition(std::size_t degree, Point a, Point b) {
  auto out = Permutation::identity(degree);
  std::vector<Point> images(out.images().begin(), out.images().end());
  std::swap(images[a], images[b]);
  return Permutation(std::move(images));
}

std::vector<Permutation> symmetric_group_generators(std::size_t degree) {
  if (degree == 1) return {Permutation::identity(1)};
  return {transposition(degree, 0, 1), cyclic_group_generators(degree).front()};
}

std::vector<Permutation> cyclic_group_generators(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>((i + 1) % degree);
  return {Permutation(std::move(images))};
}

}  // namespace setorbits
