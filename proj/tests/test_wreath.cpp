#include <doctest.h>

#include <cmath>

#include "setorbits/wreath.hpp"
#include "support.hpp"

using namespace setorbits;
using testing_support::catalog;

namespace {

BigCount choose(long n, long k) {
  BigCount r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::map<std::vector<int>, BigCount> orbit_table(const CycleIndex& ci) {
  std::map<std::vector<int>, BigCount> out;
  for (const auto& pi : partitions_of(static_cast<int>(ci.degree))) {
    out[pi.parts] = multiset_orbit_count(ci, pi);
  }
  return out;
}

const CycleIndex& m12_index() {
  static const CycleIndex ci = cycle_index(catalog().at("M12").bsgs);
  return ci;
}

}  // namespace

TEST_CASE("stars and bars: symmetric tops give C(s+m-1, m)") {
  for (int m = 1; m <= 8; ++m) {
    const auto ci = cycle_index(schreier_sims(symmetric_group_generators(m)));
    for (long s = 1; s <= 100; ++s) {
      CHECK(wreath_set_orbits(s, ci) == choose(s + m - 1, m));
    }
  }
}

TEST_CASE("trivial top on one point returns s") {
  const auto ci = cycle_index(schreier_sims(std::vector{Permutation::identity(1)}));
  for (long s : {1L, 2L, 49L, 1000L}) CHECK(wreath_set_orbits(s, ci) == s);
  CHECK_THROWS_AS(wreath_set_orbits(0, ci), std::invalid_argument);
}

TEST_CASE("explicit wreath products match both formulas") {
  const auto c2 = cyclic_group_generators(2);
  const auto s2 = cycle_index(schreier_sims(c2));
  const BigCount base = set_orbit_count(s2).value;
  REQUIRE(base == 3);
  for (const char* top_name : {"C3", "S3", "S4", "C4", "C5", "D8", "C2wrC2"}) {
    CAPTURE(top_name);
    const auto& top = catalog().at(top_name);
    const auto gens = wreath_product_generators(c2, top.generators);
    const auto g = schreier_sims(gens);
    CHECK(g.order() == top.bsgs.order() * pow2(top.degree));
    const auto top_ci = cycle_index(top.bsgs);
    const auto brute = brute_force_set_orbits(g);
    CHECK(wreath_set_orbits(base, top_ci) == brute);
    CHECK(wreath_set_orbits_partitionwise(base, static_cast<int>(top.degree), orbit_table(top_ci)) ==
          brute);
  }
}

TEST_CASE("catalog C2 wr C2 and C2 wr S3 are the explicit wreath products") {
  const auto c2 = cyclic_group_generators(2);
  const auto a = schreier_sims(wreath_product_generators(c2, cyclic_group_generators(2)));
  const auto b = schreier_sims(wreath_product_generators(c2, symmetric_group_generators(3)));
  CHECK(a.order() == catalog().at("C2wrC2").bsgs.order());
  CHECK(b.order() == catalog().at("C2wrS3").bsgs.order());
  CHECK(brute_force_set_orbits(a) == brute_force_set_orbits(catalog().at("C2wrC2").bsgs));
  CHECK(brute_force_set_orbits(b) == brute_force_set_orbits(catalog().at("C2wrS3").bsgs));
  CHECK(brute_force_set_orbits(a) == wreath_set_orbits(3, cycle_index(schreier_sims(cyclic_group_generators(2)))));
  CHECK(brute_force_set_orbits(b) == wreath_set_orbits(3, cycle_index(catalog().at("S3").bsgs)));
}

TEST_CASE("wreath products satisfy s(G) >= s(H)^m / |T|") {
  for (const char* base_name : {"C3", "S3", "C4"}) {
    for (const char* top_name : {"C3", "S3", "C2wrC2"}) {
      const auto& h = catalog().at(base_name);
      const auto& t = catalog().at(top_name);
      if (h.degree * t.degree > 12) continue;
      CAPTURE(base_name);
      CAPTURE(top_name);
      const auto g = schreier_sims(wreath_product_generators(h.generators, t.generators));
      const auto s_h = brute_force_set_orbits(h.bsgs);
      const auto s_g = brute_force_set_orbits(g);
      BigCount power;
      mpz_pow_ui(power.get_mpz_t(), s_h.get_mpz_t(), t.degree);
      CHECK(s_g * t.bsgs.order() >= power);
      CHECK(s_g == wreath_set_orbits(s_h, cycle_index(t.bsgs)));
    }
  }
}

TEST_CASE("both formulas agree for M12 tops") {
  const auto table = orbit_table(m12_index());
  for (long s : {1L, 2L, 13L, 49L, 105L}) {
    CAPTURE(s);
    CHECK(wreath_set_orbits(s, m12_index()) == wreath_set_orbits_partitionwise(s, 12, table));
  }
  CHECK(wreath_set_orbits_partitionwise(1, 12, table) == 1);
  auto missing = table;
  missing.erase(std::vector<int>{6, 6});
  CHECK_THROWS_AS(wreath_set_orbits_partitionwise(49, 12, missing), std::invalid_argument);
}

TEST_CASE("sequence terms") {
  const BigCount s0 = wreath_set_orbits(49, m12_index());
  const auto terms = sequence_terms(49, 24, s0, 12, 3);
  REQUIRE(terms.size() == 5);
  CHECK(terms[0].k == -1);
  CHECK(terms[0].s == 49);
  CHECK(terms[0].degree == 24);
  CHECK(terms[1].s == s0);
  CHECK(terms[1].degree == 288);
  CHECK(terms[2].s == (s0 + 3) * (s0 + 2) * (s0 + 1) * s0 / 24);
  CHECK(terms[2].s == tower_count(s0, 1));
  CHECK(terms[3].degree == 288 * 16);
  // log10 s_1 ≈ 4 log10 s_0 - log10 24
  const double expected = 4 * std::log10(s0.get_d()) - std::log10(24.0);
  CHECK(std::abs(static_cast<double>(mpz_sizeinbase(terms[2].s.get_mpz_t(), 10)) - expected) < 1.5);
  for (std::size_t i = 1; i + 1 < terms.size(); ++i) {
    CHECK(terms[i + 1].a.certainly_lt(terms[i].a));
    CHECK(terms[i].a.width().certainly_lt(Enclosure::decimal("1e-60")));
  }
  CHECK_THROWS(sequence_terms(49, 24, s0, 12, -1));
  CHECK_THROWS(tower_count(s0, -1));
}

TEST_CASE("limit enclosures are nested and stable under precision") {
  const BigCount s0 = wreath_set_orbits(49, m12_index());
  const auto e0 = limit_enclosure(s0, 288, 0);
  const auto e1 = limit_enclosure(s0, 288, 1);
  const auto e2 = limit_enclosure(s0, 288, 2);
  CHECK(e0.contains(e1));
  CHECK(e1.contains(e2));
  CHECK(e2.width().certainly_le(Enclosure::decimal("1e-20")));
  // The lower end is a_k minus the tail log2(24)/(3 n_k).
  const auto terms = sequence_terms(49, 24, s0, 12, 2);
  const auto tail = Enclosure::log2(24) / Enclosure::exact(3 * 4608);
  CHECK((terms[3].a - tail).intersects(e2));
  CHECK(e2.certainly_lt(terms[3].a));
  const auto wide = limit_enclosure(s0, 288, 2, 512);
  const auto narrow = limit_enclosure(s0, 288, 2, 128);
  CHECK(narrow.intersects(wide));
  CHECK(wide.width().certainly_le(narrow.width()));
  CHECK(wide.intersects(e2));
}
