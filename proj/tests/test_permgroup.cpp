#include <doctest.h>

#include <random>
#include <unordered_set>

#include "setorbits/bsgs.hpp"
#include "setorbits/permutation.hpp"
#include "support.hpp"

using namespace setorbits;
using testing_support::catalog;

namespace {

Permutation perm(std::vector<int> images) { return Permutation::from_images(images); }

}  // namespace

TEST_CASE("compose applies the right factor first") {
  const auto cycle = perm({1, 2, 0});  // (0 1 2)
  const auto swap = perm({1, 0, 2});   // (0 1)
  CHECK(compose(Permutation::identity(3), cycle) == cycle);
  CHECK(compose(cycle, Permutation::identity(3)) == cycle);
  CHECK(compose(perm({1, 0}), perm({1, 0})).is_identity());
  // 0 -> 1 -> 2, 1 -> 0 -> 1, 2 -> 2 -> 0
  CHECK(compose(cycle, swap) == perm({2, 1, 0}));
  // the other convention would give 0 -> 0
  CHECK(compose(swap, cycle) == perm({0, 2, 1}));
}

TEST_CASE("compose is associative and rejects mismatched degrees") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> a(9), b(9), c(9);
    std::iota(a.begin(), a.end(), 0);
    b = c = a;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    std::shuffle(c.begin(), c.end(), rng);
    const auto p = perm(a), q = perm(b), r = perm(c);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(compose(p, p.inverse()).is_identity());
  }
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("permutation construction validates a bijection") {
  CHECK_THROWS(perm({0, 0, 1}));
  CHECK_THROWS(perm({0, 3, 1}));
  CHECK_THROWS(perm({}));
}

TEST_CASE("cycle types") {
  CHECK(Permutation::identity(5).cycle_type().parts == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(perm({1, 2, 0}).cycle_type().parts == std::vector<int>{3});
  const auto p = Permutation::parse_cycles("(1,2)(3,4,5)", 6);
  CHECK(p.cycle_type().parts == std::vector<int>{3, 2, 1});
  CHECK(p.cycle_type().cycle_count() == 3);
  CHECK(p.cycle_type().degree() == 6);
}

TEST_CASE("cycle notation parsing") {
  const auto p = Permutation::parse_cycles("(1,2,3)(4,5)", 5);
  CHECK(p[0] == 1);
  CHECK(p[2] == 0);
  CHECK(p[4] == 3);
  CHECK(Permutation::parse_cycles(p.to_cycle_string(), 5) == p);
  CHECK(Permutation::parse_cycles("()", 4).is_identity());
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,2", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,4)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,2,1)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,2)(2,3)", 3), std::invalid_argument);
}

TEST_CASE("schreier-sims orders of named groups") {
  CHECK(catalog().at("M11").bsgs.order() == 7920);
  CHECK(catalog().at("M12").bsgs.order() == 95040);
  CHECK(catalog().at("M22").bsgs.order() == 887040 / 2);
  CHECK(catalog().at("M24").bsgs.order() == 244823040);
  CHECK(catalog().at("S4").bsgs.order() == 24);
  CHECK(schreier_sims(std::vector{Permutation::identity(6)}).order() == 1);
  CHECK_THROWS_AS(schreier_sims(std::vector{Permutation::identity(3), Permutation::identity(4)}),
                  std::invalid_argument);
}

TEST_CASE("orders agree with explicit closure for small catalog groups") {
  for (const auto& g : catalog().records()) {
    if (g.bsgs.order() > 100000) continue;
    CAPTURE(g.name);
    CHECK(BigCount(testing_support::closure(g.generators).size()) == g.bsgs.order());
  }
}

TEST_CASE("BSGS structural invariants") {
  for (const auto& g : catalog().records()) {
    CAPTURE(g.name);
    BigCount product = 1;
    for (const auto& level : g.bsgs.levels()) product *= level.transversal.size();
    CHECK(product == g.bsgs.order());
    for (const auto& s : g.bsgs.strong_generators()) CHECK(g.bsgs.contains(s));
    for (const auto& s : g.generators) CHECK(g.bsgs.contains(s));
  }
}

TEST_CASE("membership") {
  const auto& m12 = catalog().at("M12").bsgs;
  CHECK_FALSE(m12.contains(transposition(12, 0, 1)));
  CHECK(m12.contains(Permutation::identity(12)));
  for (const auto& g : catalog().at("M12").generators) CHECK(g.sign() == 1);
  const auto trivial = schreier_sims(std::vector{Permutation::identity(3)});
  CHECK(trivial.contains(Permutation::identity(3)));
  CHECK_FALSE(trivial.contains(transposition(3, 0, 2)));
  CHECK_THROWS_AS(m12.contains(Permutation::identity(11)), std::invalid_argument);
}

TEST_CASE("membership is exact over all of S_n for n <= 7") {
  for (const auto& g : catalog().records()) {
    if (g.degree > 7) continue;
    CAPTURE(g.name);
    std::vector<int> images(g.degree);
    std::iota(images.begin(), images.end(), 0);
    BigCount members = 0;
    do {
      members += g.bsgs.contains(perm(images)) ? 1 : 0;
    } while (std::next_permutation(images.begin(), images.end()));
    CHECK(members == g.bsgs.order());
  }
}

TEST_CASE("enumeration visits each element once") {
  std::vector<Permutation> seen;
  schreier_sims(std::vector{Permutation::identity(4)}).enumerate_elements(
      [&](const Permutation& p) { seen.push_back(p); });
  REQUIRE(seen.size() == 1);
  CHECK(seen[0].is_identity());

  std::unordered_set<Permutation, PermutationHash> s3;
  catalog().at("S3").bsgs.enumerate_elements([&](const Permutation& p) { s3.insert(p); });
  CHECK(s3.size() == 6);

  for (const auto& g : catalog().records()) {
    if (g.bsgs.order() > 1'000'000) continue;
    CAPTURE(g.name);
    std::unordered_set<Permutation, PermutationHash> all;
    std::size_t visits = 0;
    g.bsgs.enumerate_elements([&](const Permutation& p) {
      ++visits;
      all.insert(p);
    });
    CHECK(BigCount(visits) == g.bsgs.order());
    CHECK(all.size() == visits);
  }
}

TEST_CASE("M12 enumeration matches the closure elementwise") {
  const auto& m12 = catalog().at("M12");
  const auto reference = testing_support::closure(m12.generators);
  std::size_t found = 0;
  m12.bsgs.for_each_element([&](std::span<const Point> p) {
    found += reference.count(testing_support::Images(p.begin(), p.end()));
  });
  CHECK(found == 95040);
}

TEST_CASE("cycle count is invariant under conjugation") {
  const auto& m24 = catalog().at("M24");
  std::mt19937 rng(11);
  std::vector<Permutation> elements = m24.bsgs.strong_generators();
  for (int i = 0; i < 200; ++i) {
    const auto& a = elements[rng() % elements.size()];
    const auto& b = elements[rng() % elements.size()];
    const auto x = compose(a, b);
    elements.push_back(x);
    const auto& h = elements[rng() % elements.size()];
    const auto conj = compose(compose(h, x), h.inverse());
    CHECK(conj.cycle_type() == x.cycle_type());
    CHECK(x.cycle_type().degree() == 24);
  }
}
