#include "setorbits/bounds.hpp"

#include <stdexcept>

namespace setorbits {
namespace {

Enclosure num(long value) { return Enclosure::exact(BigCount(value)); }
Enclosure frac(long n, long d) { return Enclosure::rational(BigCount(n), BigCount(d)); }
Enclosure lg(const BigCount& value) { return Enclosure::log2(value); }

BigCount pow_big(long base, unsigned long exponent) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exponent);
  return out;
}

// ★ for a group of the given degree whose log2 s is bounded below by `log2_s`.
CaseReport star_from_log(std::string id, const Enclosure& log2_s, long degree, const Enclosure& beta,
                         std::string inputs, bool expect = true) {
  auto lhs = (log2_s - log2_alpha()) / num(degree);
  return make_case(std::move(id), std::move(lhs), Relation::GreaterEqual, beta, std::move(inputs),
                   expect);
}

// log2 of the Theorem 1(3) bound: 0.76 n.
Enclosure log2_thm1_part3(int n) { return frac(76L * n, 100); }

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Excluded: return "EXCLUDED";
    case Verdict::NoData: return "NODATA";
  }
  return "?";
}

Verdict CaseReport::verdict() const {
  if (no_data) return Verdict::NoData;
  if (satisfied == expect_satisfied) return satisfied ? Verdict::Pass : Verdict::Excluded;
  return Verdict::Fail;
}

CaseReport make_case(std::string case_id, Enclosure lhs, Relation relation, Enclosure rhs,
                     std::string inputs, bool expect_satisfied) {
  CaseReport r;
  r.case_id = std::move(case_id);
  r.relation = relation;
  r.satisfied = relation == Relation::GreaterEqual ? lhs.certainly_ge(rhs) : lhs.certainly_le(rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.inputs = std::move(inputs);
  r.expect_satisfied = expect_satisfied;
  return r;
}

std::string format_case(const CaseReport& r, int digits) {
  std::string line = r.case_id + " lhs=" + r.lhs.str(digits) +
                     (r.relation == Relation::GreaterEqual ? " >= " : " <= ") +
                     "rhs=" + r.rhs.str(digits) + " verdict=" + to_string(r.verdict());
  if (!r.inputs.empty()) line += " # " + r.inputs;
  return line;
}

Enclosure log2_alpha(mpfr_prec_t precision) {
  return Enclosure::log2(24, precision) / Enclosure::exact(3, precision);
}

OrderBound maroti_log2_order_bound(int n, mpfr_prec_t precision) {
  if (n < 5) throw std::invalid_argument("maroti bound needs degree >= 5");
  const auto degree = Enclosure::exact(n, precision);
  // 50 · n^{√n}
  OrderBound best{Enclosure::log2(50, precision) + degree.sqrt() * Enclosure::log2(n, precision),
                  "50*n^sqrt(n)"};
  auto consider = [&](Enclosure candidate, const char* clause) {
    if (candidate.certainly_lt(best.log2_value)) best = {std::move(candidate), clause};
  };
  if (n > 24) {
    consider(degree, "2^n");
  } else {
    consider(degree * Enclosure::log2(3, precision), "3^n");
  }
  if (n >= 25 && n != 32) {
    consider(Enclosure::rational(76L * n, 100, precision), "2^(0.76n)");
  }
  return best;
}

Enclosure maroti_order_bound(int n, mpfr_prec_t precision) {
  return maroti_log2_order_bound(n, precision).log2_value.pow2();
}

CaseReport star_check(const BigCount& s_H, int m, const Enclosure& beta, std::string case_id,
                      std::string inputs) {
  if (s_H < 1) throw std::invalid_argument("star_check: s(H) must be >= 1");
  if (m < 2) throw std::invalid_argument("star_check: m must be >= 2");
  if (case_id.empty()) case_id = "star.m=" + std::to_string(m);
  if (inputs.empty()) inputs = "s(H)>=" + s_H.get_str();
  return star_from_log(std::move(case_id), lg(s_H), m, beta, std::move(inputs));
}

SetOrbitBounds quoted_set_orbit_bounds() {
  return {
      {14, {35, "Lemma 3, PGL(2,13)"}},      {15, {46, "Lemma 3, PSL(4,2)"}},
      {16, {32, "Lemma 3, 2^4.PSL(4,2)"}},  {17, {48, "Lemma 3, PGammaL(2,16)"}},
      {21, {158, "Lemma 3, PGammaL(3,4)"}}, {22, {105, "Lemma 3, M22.2"}},
      {23, {72, "Lemma 3, M23"}},           {24, {1382, "Lemma 3, H not M24"}},
      {32, {361, "Lemma 3, ASL(5,2)"}},
  };
}

std::vector<CaseReport> verify_prop1(const OrderTable& table, const Enclosure& beta,
                                     const SetOrbitBounds& bounds) {
  std::vector<CaseReport> out;
  auto id = [](int m) { return "prop1.m=" + std::to_string(m); };
  auto from_bound = [&](int m) {
    auto it = bounds.find(m);
    if (it == bounds.end()) {
      throw std::out_of_range("no set-orbit bound for degree " + std::to_string(m));
    }
    out.push_back(star_check(it->second.value, m, beta, id(m),
                             "s(H)>=" + it->second.value.get_str() + " [" + it->second.source + "]"));
  };
  auto from_order = [&](int m) {
    const BigCount& order = table.max_order(m);
    // s(H) ≥ 2^m / |H|
    out.push_back(star_from_log(id(m), num(m) - lg(order), m, beta,
                                "s(H)>=2^" + std::to_string(m) + "/" + order.get_str() + " [Table 3]"));
  };

  // Two-level analysis for m = 2, 3: K = H ≀ P1 with P1 of degree m1.
  auto two_level = [&](int m, int s_H, int binomial_limit) {
    auto kid = [&](const std::string& m1) { return id(m) + ".m1=" + m1; };
    for (int m1 = 2; m1 <= 32; ++m1) {
      const long degree = static_cast<long>(m) * m1;
      if (m1 <= binomial_limit) {
        const BigCount sK = binomial(BigCount(s_H + m1 - 1), static_cast<unsigned long>(s_H - 1));
        out.push_back(star_from_log(kid(std::to_string(m1)), lg(sK), degree, beta,
                                    "s(K)>=C(" + std::to_string(s_H + m1 - 1) + "," +
                                        std::to_string(s_H - 1) + ")=" + sK.get_str()));
      } else if (m1 <= 24 || m1 == 32) {
        const BigCount& order = table.max_order(m1);
        out.push_back(star_from_log(kid(std::to_string(m1)),
                                    num(m1) * lg(s_H) - lg(order), degree, beta,
                                    "s(K)>=" + std::to_string(s_H) + "^" + std::to_string(m1) +
                                        "/" + order.get_str() + " [Table 3]"));
      } else {
        out.push_back(star_from_log(kid(std::to_string(m1)),
                                    num(m1) * lg(s_H) - log2_thm1_part3(m1), degree, beta,
                                    "s(K)>=" + std::to_string(s_H) + "^" + std::to_string(m1) +
                                        "/2^(0.76*" + std::to_string(m1) + ") [Theorem 1(3)]"));
      }
    }
    // m1 ≥ 33: the left side increases with m1, so m1 = 33 covers the tail.
    out.push_back(star_from_log(kid(">=33"), num(33) * lg(s_H) - log2_thm1_part3(33),
                                static_cast<long>(m) * 33, beta,
                                "evaluated at m1=33, increasing in m1 [Theorem 1(3)]"));
  };

  two_level(2, 3, 17);
  two_level(3, 4, 16);
  for (int m = 4; m <= 13; ++m) {
    out.push_back(star_check(m + 1, m, beta, id(m),
                             "s(H)>=m+1" + std::string(m == 6 ? "; gap: m=6 is not in the quoted case list" : "")));
  }
  for (int m : {14, 15, 16, 17}) from_bound(m);
  for (int m : {18, 19, 20}) from_order(m);
  for (int m : {21, 22, 23, 24}) from_bound(m);
  for (int m = 25; m <= 31; ++m) {
    out.push_back(star_from_log(id(m), num(m) - log2_thm1_part3(m), m, beta,
                                "s(H)>=2^(0.24m) [Theorem 1(3)]"));
  }
  from_bound(32);
  out.push_back(star_from_log(id(33) + "+", num(33) - log2_thm1_part3(33), 33, beta,
                              "evaluated at m=33, increasing in m [Theorem 1(3)]"));
  // M24 is the case the proposition has to exclude.
  out.push_back(star_from_log("prop1.m=24.M24", lg(49), 24, beta, "s(M24)=49 is excluded", false));
  return out;
}

std::vector<CaseReport> verify_prop2(const OrderTable& table, const Enclosure& beta) {
  std::vector<CaseReport> out;
  const BigCount s = 49;
  auto id = [](const std::string& m1) { return "prop2.m1=" + m1; };
  for (int m1 = 2; m1 <= 4; ++m1) {
    const BigCount sK = binomial(BigCount(48 + m1), 48);
    out.push_back(star_from_log(id(std::to_string(m1)), lg(sK), 24L * m1, beta,
                                "s(K)>=C(" + std::to_string(48 + m1) + ",48)=" + sK.get_str()));
  }
  for (int m1 = 5; m1 <= 32; ++m1) {
    const auto* row = table.row(m1);
    if (!row || !row->max_order) {
      CaseReport r;
      r.case_id = id(std::to_string(m1));
      r.no_data = true;
      r.inputs = "no Table 3 order";
      out.push_back(std::move(r));
      continue;
    }
    BigCount order = *row->max_order;
    std::string source = "[Table 3 max]";
    if (m1 == 12) {
      if (!row->second_order) throw std::out_of_range("order table lacks degree-12 second order");
      order = *row->second_order;
      source = "[Table 3 second, P1 not M12]";
    }
    out.push_back(star_from_log(id(std::to_string(m1)), num(m1) * lg(s) - lg(order), 24L * m1, beta,
                                "s(K)>=49^" + std::to_string(m1) + "/" + order.get_str() + " " +
                                    source));
  }
  out.push_back(star_from_log(id(">=33"), num(33) * lg(s) - log2_thm1_part3(33), 24L * 33, beta,
                              "evaluated at m1=33, increasing in m1 [Theorem 1(3)]"));
  out.push_back(star_from_log(id("12.M12"), num(12) * lg(s) - lg(table.max_order(12)), 24L * 12,
                              beta, "P1=M12 is excluded", false));
  return out;
}

std::vector<CaseReport> verify_thm3(const OrderTable& table, const BigCount& s0) {
  std::vector<CaseReport> out;
  const auto limit = Enclosure::decimal(kThm3Constant);
  auto id = [](const std::string& m) { return "thm3.m=" + m; };
  auto degree_case = [&](const std::string& case_id, int m, const Enclosure& log2_order,
                         const std::string& inputs, bool expect = true) {
    auto lhs = (log2_order + log2_alpha()) / num(m);
    out.push_back(make_case(case_id, std::move(lhs), Relation::LessEqual, limit, inputs, expect));
  };
  degree_case(id("2"), 2, lg(2), "|P1|<=2 [S2]");
  degree_case(id("3"), 3, lg(6), "|P1|<=6 [S3]");
  degree_case(id("4"), 4, lg(24), "S4 top is the excluded minimiser", false);
  for (int m = 5; m <= 38; ++m) {
    const auto* row = table.row(m);
    if (row && row->max_order) {
      degree_case(id(std::to_string(m)), m, lg(*row->max_order),
                  "|P1|<=" + row->max_order->get_str() + " [Table 3]");
    } else {
      degree_case(id(std::to_string(m)), m, num(m),
                  "|P1|<2^" + std::to_string(m) + " [Theorem 1(2); Table 3 N/A]");
    }
  }
  degree_case(id(">=39"), 39, num(39), "evaluated at m=39, decreasing in m [Theorem 1(2)]");

  // The constant itself: log2(24)·(1/4+1/16+1/64+1/256) minus the quoted slack.
  const auto slack = Enclosure::decimal("0.0000000000000023");
  const auto chain = Enclosure::log2(24) * frac(85, 256) - slack;
  const auto tolerance = Enclosure::decimal("1e-18");
  const auto diff = chain - limit;
  CaseReport constant = make_case("thm3.constant", hull(diff, limit - chain), Relation::LessEqual,
                                  tolerance,
                                  "|log2(24)*85/256 - 2.3e-15 - " + std::string(kThm3Constant) + "|");
  constant.satisfied = diff.certainly_le(tolerance) && (limit - chain).certainly_le(tolerance);
  out.push_back(std::move(constant));
  // log2((A+3)/A) ≤ 2.3e-15 for A = s_0.
  out.push_back(make_case("thm3.slack", lg(s0 + 3) - lg(s0), Relation::LessEqual, slack,
                          "A=s0=" + s0.get_str()));
  return out;
}

std::vector<CaseReport> alpha_bound_check(const OrderTable& table) {
  std::vector<CaseReport> out;
  auto add = [&](int n, const BigCount& order, const std::string& source) {
    // |P| ≤ 24^{(n−1)/3}  ⇔  |P|^3 ≤ 24^{n−1}, decided exactly.
    const BigCount cube = order * order * order;
    const bool holds = cube <= pow_big(24, static_cast<unsigned long>(n - 1));
    CaseReport r = make_case("alpha.n=" + std::to_string(n), lg(order), Relation::LessEqual,
                             frac(n - 1, 3) * lg(24), source + "; decided exactly as |P|^3 <= 24^(n-1)");
    r.satisfied = holds;
    out.push_back(std::move(r));
  };
  add(2, 2, "|S2|=2");
  add(3, 6, "|S3|=6");
  add(4, 24, "|S4|=24");
  for (const auto& row : table.rows()) {
    if (row.max_order) {
      add(row.degree, *row.max_order, "Table 3 max " + row.max_order->get_str());
    } else if (row.degree > 24) {
      add(row.degree, pow_big(2, static_cast<unsigned long>(row.degree)),
          "Table 3 N/A; |P|<2^n [Theorem 1(2)]");
    } else {
      CaseReport r;
      r.case_id = "alpha.n=" + std::to_string(row.degree);
      r.no_data = true;
      r.inputs = "Table 3 N/A";
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CaseReport> verify_lemma4(const Enclosure& beta) {
  std::vector<CaseReport> out;
  for (int n = 2; n <= 24; ++n) {
    out.push_back(make_case("lemma4.n=" + std::to_string(n), lg(n + 1) / num(n),
                            Relation::GreaterEqual, beta, "s(G)>=n+1"));
  }
  out.push_back(make_case("lemma4.n=32", lg(361) / num(32), Relation::GreaterEqual, beta,
                          "s(G)>=361 [Lemma 3]"));
  out.push_back(make_case("lemma4.n>=25", frac(24, 100), Relation::GreaterEqual, beta,
                          "s(G)>=2^(0.24n), n!=32 [Theorem 1(3)]"));
  return out;
}

}  // namespace setorbits
