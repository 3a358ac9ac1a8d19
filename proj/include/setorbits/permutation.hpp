#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace setorbits {

/// A point of the permutation domain {0, ..., n-1}.
using Point = std::uint8_t;

inline constexpr std::size_t kMaxDegree = 256;

/// Multiset of cycle lengths (fixed points included), sorted descending.
struct CycleType {
  std::vector<int> parts;

  int degree() const;
  std::size_t cycle_count() const { return parts.size(); }
  std::string str() const;

  auto operator<=>(const CycleType&) const = default;
};

/// Bijection on {0..n-1} stored as its image table.
class Permutation {
public:
  Permutation() = default;
  /// Validates that `images` is a bijection.
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t degree);
  /// Builds from 0-based images given as ints (convenience for tests and bindings).
  static Permutation from_images(std::span<const int> images);
  /// Parses 1-based disjoint cycle notation such as "(1,2,3)(4,5)"; "()" is the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  CycleType cycle_type() const;
  /// Sign of the permutation: +1 even, -1 odd.
  int sign() const;
  /// 1-based disjoint cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<Point> images_;
};

/// (p ∘ q)(i) = p(q(i)): the right factor is applied first.
Permutation compose(const Permutation& p, const Permutation& q);

/// Image-table view of a cycle type without building a Permutation.
CycleType cycle_type_of(std::span<const Point> images);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Orbits of ⟨generators⟩ on points, each sorted, ordered by least element.
std::vector<std::vector<Point>> point_orbits(std::span<const Permutation> generators,
                                             std::size_t degree);

Permutation transposition(std::size_t degree, Point a, Point b);
std::vector<Permutation> symmetric_group_generators(std::size_t degree);
std::vector<Permutation> cyclic_group_generators(std::size_t degree);

}  // namespace setorbits
