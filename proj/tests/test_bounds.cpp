#include <doctest.h>

#include <cmath>

#include "setorbits/bounds.hpp"
#include "setorbits/wreath.hpp"
#include "support.hpp"

using namespace setorbits;
using testing_support::catalog;
using testing_support::table3;

namespace {

const BigCount& s0() {
  static const BigCount v = wreath_set_orbits(49, cycle_index(catalog().at("M12").bsgs));
  return v;
}

Enclosure beta(mpfr_prec_t precision = kDefaultPrecisionBits) {
  return sequence_terms(49, 24, s0(), 12, 2, precision).back().a;
}

const CaseReport& find(const std::vector<CaseReport>& reports, const std::string& id) {
  for (const auto& r : reports) {
    if (r.case_id == id) return r;
  }
  throw std::out_of_range("no case " + id);
}

void all_hold(const std::vector<CaseReport>& reports) {
  for (const auto& r : reports) {
    CAPTURE(format_case(r));
    CHECK(r.verdict() != Verdict::Fail);
    CHECK(r.satisfied == r.expect_satisfied);
  }
}

}  // namespace

TEST_CASE("order bounds") {
  const auto b32 = maroti_log2_order_bound(32);
  CHECK(b32.clause == "2^n");
  CHECK(b32.log2_value.lo_double() == 32.0);
  const auto b25 = maroti_log2_order_bound(25);
  CHECK(b25.clause == "2^(0.76n)");
  CHECK(std::abs(b25.log2_value.lo_double() - 19.0) < 1e-12);
  CHECK(maroti_order_bound(25).contains(Enclosure::exact(1 << 19)));
  CHECK(maroti_order_bound(5).certainly_gt(Enclosure::exact(table3().max_order(5))));
  // 3^5 = 243 is below 50 * 5^sqrt(5) ≈ 1836.6
  CHECK(maroti_log2_order_bound(5).clause == "3^n");
  CHECK(std::abs(maroti_order_bound(5).lo_double() - 243) < 1e-9);
  CHECK(std::abs(maroti_log2_order_bound(7).log2_value.lo_double() - 7 * std::log2(3.0)) < 1e-12);
  CHECK(maroti_log2_order_bound(10).clause == "3^n");
  CHECK_THROWS(maroti_order_bound(4));
  for (const auto& row : table3().rows()) {
    if (!row.max_order) continue;
    CAPTURE(row.degree);
    CHECK(maroti_order_bound(row.degree).certainly_gt(Enclosure::exact(*row.max_order)));
  }
}

TEST_CASE("star inequality") {
  const auto b = beta();
  CHECK(star_check(35, 14, b).verdict() == Verdict::Pass);
  CHECK_FALSE(star_check(49, 24, b).satisfied);
  for (int m = 2; m <= 40; ++m) CHECK(star_check(pow2(m), m, b).satisfied);
  // (log2 35 - log2 24 / 3) / 14
  const double direct = (std::log2(35.0) - std::log2(24.0) / 3) / 14;
  const auto r = star_check(35, 14, b);
  CHECK(r.lhs.lo_double() <= direct + 1e-15);
  CHECK(r.lhs.hi_double() >= direct - 1e-15);
  CHECK_THROWS(star_check(0, 5, b));
  CHECK_THROWS(star_check(5, 1, b));
}

TEST_CASE("proposition 1 cases") {
  const auto reports = verify_prop1(table3(), beta());
  all_hold(reports);
  for (int m = 2; m <= 32; ++m) {
    const std::string id = "prop1.m=" + std::to_string(m);
    bool present = false;
    for (const auto& r : reports) present |= r.case_id.rfind(id, 0) == 0;
    CHECK_MESSAGE(present, id);
  }
  CHECK(find(reports, "prop1.m=19").inputs.find("2^19/342") != std::string::npos);
  CHECK(find(reports, "prop1.m=6").inputs.find("gap") != std::string::npos);
  CHECK(find(reports, "prop1.m=3.m1=5").inputs.find("C(8,3)=56") != std::string::npos);
  CHECK(find(reports, "prop1.m=24.M24").verdict() == Verdict::Excluded);
}

TEST_CASE("proposition 1 needs its table rows") {
  std::vector<PrimitiveOrderRow> rows;
  for (const auto& r : table3().rows()) {
    if (r.degree != 20) rows.push_back(r);
  }
  try {
    verify_prop1(OrderTable(rows), beta());
    FAIL("missing degree accepted");
  } catch (const std::out_of_range& e) {
    CHECK(std::string(e.what()).find("20") != std::string::npos);
  }
}

TEST_CASE("proposition 2 cases") {
  const auto reports = verify_prop2(table3(), beta());
  all_hold(reports);
  CHECK(find(reports, "prop2.m1=12").inputs.find("7920") != std::string::npos);
  CHECK(find(reports, "prop2.m1=4").inputs.find("270725") != std::string::npos);
  CHECK(binomial(52, 48) == 270725);
  CHECK(find(reports, "prop2.m1=>=33").verdict() == Verdict::Pass);
  CHECK(find(reports, "prop2.m1=12.M12").verdict() == Verdict::Excluded);
  for (int m1 = 2; m1 <= 32; ++m1) CHECK_NOTHROW(find(reports, "prop2.m1=" + std::to_string(m1)));
}

TEST_CASE("theorem 3 degree checks") {
  const auto reports = verify_thm3(table3(), s0());
  all_hold(reports);
  const auto& m24 = find(reports, "thm3.m=24");
  CHECK(std::abs(m24.lhs.lo_double() - 1.225) < 0.001);
  CHECK(find(reports, "thm3.m=4").verdict() == Verdict::Excluded);
  CHECK(std::abs(find(reports, "thm3.m=4").lhs.lo_double() - 1.529) < 0.001);
  CHECK(find(reports, "thm3.m=5").verdict() == Verdict::Pass);
  CHECK(find(reports, "thm3.m=34").inputs.find("N/A") != std::string::npos);
  CHECK(find(reports, "thm3.constant").verdict() == Verdict::Pass);
  CHECK(find(reports, "thm3.slack").verdict() == Verdict::Pass);
}

TEST_CASE("alpha bound rows") {
  const auto reports = alpha_bound_check(table3());
  all_hold(reports);
  for (const char* id : {"alpha.n=5", "alpha.n=24", "alpha.n=32", "alpha.n=4"}) {
    CHECK(find(reports, id).verdict() == Verdict::Pass);
  }
  // 24 <= 24^(3/3) holds only with equality
  CHECK(find(reports, "alpha.n=4").satisfied);
  const double rhs24 = std::pow(24.0, 23.0 / 3);
  CHECK(rhs24 > 3.8e10);
  CHECK(rhs24 < 4.0e10);
}

TEST_CASE("lemma 4 branches") {
  all_hold(verify_lemma4(beta()));
}

TEST_CASE("verdicts do not depend on precision") {
  const auto coarse = verify_prop1(table3(), beta());
  const auto fine = verify_prop1(table3(), beta(512));
  REQUIRE(coarse.size() == fine.size());
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    CHECK(coarse[i].verdict() == fine[i].verdict());
  }
  const auto p2c = verify_prop2(table3(), beta());
  const auto p2f = verify_prop2(table3(), beta(512));
  for (std::size_t i = 0; i < p2c.size(); ++i) CHECK(p2c[i].verdict() == p2f[i].verdict());
}

TEST_CASE("report lines") {
  const auto r = star_check(35, 14, beta());
  const auto line = format_case(r, 6);
  CHECK(line.rfind("star.m=14 lhs=[", 0) == 0);
  CHECK(line.find("verdict=PASS") != std::string::npos);
  CaseReport missing;
  missing.case_id = "x";
  missing.no_data = true;
  CHECK(missing.verdict() == Verdict::NoData);
  CHECK(std::string(to_string(Verdict::Excluded)) == "EXCLUDED");
}
