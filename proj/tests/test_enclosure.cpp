#include <doctest.h>

#include <cmath>

#include "setorbits/enclosure.hpp"

using namespace setorbits;

TEST_CASE("exact values are points") {
  const auto x = Enclosure::exact(12345);
  CHECK(x.lo_double() == 12345.0);
  CHECK(x.hi_double() == 12345.0);
  CHECK(x.str(2) == "[12345.00, 12345.00]");
  CHECK(Enclosure::log2(BigCount(1024)).str(30) ==
        "[10.000000000000000000000000000000, 10.000000000000000000000000000000]");
}

TEST_CASE("rationals round outward") {
  const auto third = Enclosure::rational(1, 3);
  CHECK(third.str(5) == "[0.33333, 0.33334]");
  CHECK(third.certainly_gt(Enclosure::decimal("0.3333")));
  CHECK(third.certainly_lt(Enclosure::decimal("0.3334")));
  CHECK_FALSE(third.certainly_ge(third));
  CHECK(third.intersects(third));
  CHECK(third.contains(third));
  const auto neg = Enclosure::rational(-2, 3);
  CHECK(neg.str(3) == "[-0.667, -0.666]");
}

TEST_CASE("arithmetic encloses the true result") {
  const auto a = Enclosure::rational(1, 7);
  const auto b = Enclosure::rational(-5, 11);
  const double ta = 1.0 / 7, tb = -5.0 / 11;
  auto inside = [](const Enclosure& e, double v) {
    return e.lo_double() <= v + 1e-15 && v - 1e-15 <= e.hi_double();
  };
  CHECK(inside(a + b, ta + tb));
  CHECK(inside(a - b, ta - tb));
  CHECK(inside(a * b, ta * tb));
  CHECK(inside(a / b, ta / tb));
  CHECK(inside(b * b, tb * tb));
  CHECK(inside(Enclosure::log2(BigCount(49)), std::log2(49.0)));
  CHECK(inside(Enclosure::exact(3).sqrt(), std::sqrt(3.0)));
  CHECK(inside(Enclosure::rational(1, 2).pow2(), std::sqrt(2.0)));
  CHECK(inside(hull(a, b), 0.0));
  CHECK(inside(min(a, b), tb));
  CHECK((a - a).contains(Enclosure::exact(0)));
}

TEST_CASE("domain errors") {
  CHECK_THROWS(Enclosure::log2(BigCount(0)));
  CHECK_THROWS(Enclosure::exact(0).log2());
  CHECK_THROWS(Enclosure::exact(1) / hull(Enclosure::exact(-1), Enclosure::exact(1)));
  CHECK_THROWS(Enclosure::decimal("0.1x"));
  CHECK_THROWS(Enclosure::exact(-4).sqrt());
}

TEST_CASE("decimal literals and their rounding intervals") {
  const auto d = Enclosure::decimal("0.1712268716679245432");
  // outward printing of an inexact binary value widens by one decimal ulp
  CHECK(d.str(19) == "[0.1712268716679245431, 0.1712268716679245433]");
  CHECK(d.width().certainly_lt(Enclosure::decimal("1e-70")));
  const auto r = decimal_rounding_interval("0.125");
  CHECK(r.str(4) == "[0.1244, 0.1256]");
  CHECK(r.str(8) == "[0.12449999, 0.12550001]");
  CHECK(r.contains(Enclosure::decimal("0.1249")));
  CHECK_FALSE(r.intersects(Enclosure::decimal("0.1256")));
  CHECK(decimal_rounding_interval("12").str(1) == "[11.5, 12.5]");
}

TEST_CASE("strict containment and ordering") {
  const auto x = Enclosure::rational(1, 3);
  CHECK(x.strictly_inside(Enclosure::decimal("0.3"), Enclosure::decimal("0.4")));
  CHECK(x.strictly_inside(Enclosure::decimal("0.3333333"), Enclosure::decimal("0.3333334")));
  CHECK_FALSE(x.strictly_inside(Enclosure::decimal("0.34"), Enclosure::decimal("0.4")));
  CHECK_FALSE(Enclosure::exact(1).strictly_inside(Enclosure::exact(1), Enclosure::exact(2)));
  CHECK(Enclosure::exact(1).certainly_le(Enclosure::exact(1)));
  CHECK_FALSE(Enclosure::exact(1).certainly_lt(Enclosure::exact(1)));
}

TEST_CASE("precision controls width") {
  const auto coarse = Enclosure::log2(BigCount(3), 64);
  const auto fine = Enclosure::log2(BigCount(3), 512);
  CHECK(coarse.precision() == 64);
  CHECK(fine.width().certainly_lt(coarse.width()));
  CHECK(coarse.intersects(fine));
  CHECK(fine.width().certainly_lt(Enclosure::decimal("1e-150")));
}
