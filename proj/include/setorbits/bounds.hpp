#pragma once

#include <map>
#include <string>
#include <vector>

#include "setorbits/bigcount.hpp"
#include "setorbits/catalog.hpp"
#include "setorbits/enclosure.hpp"

namespace setorbits {

enum class Relation { GreaterEqual, LessEqual };

enum class Verdict {
  Pass,      // holds at the interval level, as required
  Fail,      // required inequality not certified
  Excluded,  // a case the argument must exclude; shown to fail as expected
  NoData,    // an input is missing
};

const char* to_string(Verdict v);

/// One certified inequality lhs ≥ rhs (or ≤).
struct CaseReport {
  std::string case_id;
  Enclosure lhs;
  Enclosure rhs;
  Relation relation = Relation::GreaterEqual;
  bool satisfied = false;        // certified at the interval level
  bool expect_satisfied = true;  // false for exclusion demonstrations
  bool no_data = false;
  std::string inputs;            // provenance notes

  Verdict verdict() const;
};

/// Build a report, deciding satisfaction from the enclosures.
CaseReport make_case(std::string case_id, Enclosure lhs, Relation relation, Enclosure rhs,
                     std::string inputs, bool expect_satisfied = true);

/// Stable one-line rendering: `<id> lhs=[lo,hi] <op> rhs=[lo,hi] verdict=<V> # inputs`.
std::string format_case(const CaseReport& report, int digits = 20);

/// log2 α with α = 24^{1/3}.
Enclosure log2_alpha(mpfr_prec_t precision = kDefaultPrecisionBits);

/// Upper bound on |G| for a primitive G of degree n ≥ 5 not containing A_n:
/// the minimum of 50·n^{√n}, 3^n (2^n when n > 24) and 2^{0.76 n} (n ≥ 25, n ≠ 32).
Enclosure maroti_order_bound(int n, mpfr_prec_t precision = kDefaultPrecisionBits);
/// The same bound in log2 form, with the name of the clause that attains it.
struct OrderBound {
  Enclosure log2_value;
  std::string clause;
};
OrderBound maroti_log2_order_bound(int n, mpfr_prec_t precision = kDefaultPrecisionBits);

/// ★: (log2 s_H − log2 α)/m ≥ β.
CaseReport star_check(const BigCount& s_H, int m, const Enclosure& beta,
                      std::string case_id = {}, std::string inputs = {});

/// Lower bounds s(H) ≥ value for primitive H of the given degree (not
/// containing large alternating factors), as used by the case analyses.
struct SetOrbitBound {
  BigCount value;
  std::string source;
};
using SetOrbitBounds = std::map<int, SetOrbitBound>;

/// The constants quoted for degrees 14–17, 21–24 (H ≇ M24) and 32.
SetOrbitBounds quoted_set_orbit_bounds();

std::vector<CaseReport> verify_prop1(const OrderTable& table, const Enclosure& beta,
                                     const SetOrbitBounds& bounds = quoted_set_orbit_bounds());
std::vector<CaseReport> verify_prop2(const OrderTable& table, const Enclosure& beta);
/// `s0` feeds the log2((A+3)/A) slack check.
std::vector<CaseReport> verify_thm3(const OrderTable& table, const BigCount& s0);
std::vector<CaseReport> alpha_bound_check(const OrderTable& table);
std::vector<CaseReport> verify_lemma4(const Enclosure& beta);

/// The constant the degree checks compare against.
inline constexpr const char* kThm3Constant = "1.522350830317569088";

}  // namespace setorbits
