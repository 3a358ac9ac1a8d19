#include "setorbits/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "setorbits/bounds.hpp"
#include "setorbits/catalog.hpp"
#include "setorbits/counting.hpp"
#include "setorbits/wreath.hpp"

namespace setorbits {
namespace {

// Values printed in the paper, compared against (never substituted for) the
// recomputed ones.
constexpr const char* kPaperS0 = "2017737434447329";
constexpr const char* kPaperA[] = {"0.1765335412289444", "0.172553539058179", "0.171558538515488"};
constexpr const char* kRemarkLo = "0.1712268716679245432";
constexpr const char* kRemarkHi = "0.1712268716679245434";

struct Lemma3Entry {
  const char* group;
  long value;
  bool exact;  // equality quoted; otherwise a lower bound
};
constexpr Lemma3Entry kLemma3[] = {
    {"PGL(2,13)", 35, true},   {"PSL(4,2)", 46, true},  {"AGL(4,2)", 32, true},
    {"PGammaL(2,16)", 48, true}, {"PGammaL(3,4)", 158, true}, {"M22", 130, true},
    {"M22.2", 105, true},      {"M23", 72, true},       {"AGL(1,23)", 16578, false},
    {"M24", 49, true},         {"PGL(2,23)", 1382, false}, {"ASL(5,2)", 361, false},
    {"PGL(2,31)", 144321, false},
};

// Groups whose Table 3 entry is the catalogued maximum.
constexpr std::pair<int, const char*> kTableMaxima[] = {
    {11, "M11"}, {12, "M12"}, {22, "M22.2"}, {23, "M23"}, {24, "M24"}, {32, "ASL(5,2)"},
};

mpfr_prec_t precision_for(int digits) {
  const auto bits = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 64;
  return std::max<mpfr_prec_t>(kDefaultPrecisionBits, bits);
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != piece.size() || value <= 0) {
      throw std::invalid_argument("bad partition '" + text + "'");
    }
    parts.push_back(value);
  }
  if (parts.empty()) throw std::invalid_argument("empty partition");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

class Session {
public:
  Session(const RunConfig& config, std::ostream& report, std::ostream& status)
      : config_(config), out_(report), status_(status) {}

  const Catalog& catalog() {
    if (!catalog_) catalog_.emplace(load_catalog(config_.catalog));
    return *catalog_;
  }
  const OrderTable& table() {
    if (!table_) table_.emplace(load_order_table(config_.table3));
    return *table_;
  }

  const CycleIndex& index(const std::string& name) {
    auto it = census_.find(name);
    if (it != census_.end()) return it->second;
    const auto& group = catalog().at(name);
    ProgressFn progress;
    if (config_.progress && group.bsgs.order() > 5'000'000) {
      progress = [this, name, last = std::size_t{0}](std::size_t done, std::size_t total) mutable {
        const std::size_t percent = 100 * done / total;
        if (percent >= last + 10 || done == total) {
          last = percent;
          status_ << "census " << name << ": " << done << "/" << total << " branches\n" << std::flush;
        }
      };
    }
    return census_.emplace(name, cycle_index(group.bsgs, config_.workers, progress)).first->second;
  }

  std::ostream& out() { return out_; }
  std::ostream& status() { return status_; }
  const RunConfig& config() const { return config_; }

  void check(const std::string& id, bool ok, const std::string& detail) {
    out_ << "CHECK " << id << ' ' << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) out_ << " # " << detail;
    out_ << '\n';
    if (!ok) ++failures_;
  }
  void paper(const std::string& id, bool match, const std::string& computed,
             const std::string& printed) {
    out_ << "PAPER " << id << ' ' << (match ? "MATCH" : "DIFFERS") << " computed=" << computed
         << " paper=" << printed << '\n';
    if (!match) ++differences_;
  }
  void note(const std::string& text) { out_ << "NOTE " << text << '\n'; }
  void info(const std::string& id, const std::string& text) {
    out_ << "INFO " << id << ' ' << text << '\n';
  }
  void cases(const std::vector<CaseReport>& reports) {
    for (const auto& r : reports) {
      out_ << "CASE " << format_case(r, config_.digits) << '\n';
      if (r.verdict() == Verdict::Fail) ++failures_;
    }
  }

  // Runs one section; an exception is a failed required check.
  template <class F>
  void section(const std::string& name, F&& body) {
    out_ << "SECTION " << name << '\n';
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("error: ") + e.what());
    }
  }

  int finish() {
    out_ << "SUMMARY required_failures=" << failures_ << " paper_differences=" << differences_
         << (config_.strict ? " strict" : "") << " status="
         << (exit_status() == 0 ? "PASS" : "FAIL") << '\n';
    return exit_status();
  }
  int exit_status() const {
    return failures_ == 0 && (!config_.strict || differences_ == 0) ? 0 : 1;
  }

private:
  const RunConfig& config_;
  std::ostream& out_;
  std::ostream& status_;
  std::optional<Catalog> catalog_;
  std::optional<OrderTable> table_;
  std::map<std::string, CycleIndex> census_;
  int failures_ = 0;
  int differences_ = 0;
};

std::string label(const std::vector<std::string>& groups, const std::string& name,
                  const std::string& value) {
  return groups.size() == 1 ? value : name + " " + value;
}

int run_order(Session& s) {
  for (const auto& name : s.config().groups) {
    s.out() << label(s.config().groups, name, s.catalog().at(name).bsgs.order().get_str()) << '\n';
  }
  return 0;
}

int run_set_orbits(Session& s) {
  for (const auto& name : s.config().groups) {
    const auto count = set_orbit_count(s.index(name));
    s.out() << label(s.config().groups, name, count.value.get_str()) << '\n';
  }
  return 0;
}

int run_cycle_index(Session& s) {
  for (const auto& name : s.config().groups) {
    const auto& ci = s.index(name);
    s.out() << "group " << name << " degree " << ci.degree << " order " << ci.group_order << '\n';
    for (const auto& [type, count] : ci.terms) s.out() << type.str() << ' ' << count << '\n';
  }
  return 0;
}

int run_multiset_orbits(Session& s) {
  for (const auto& name : s.config().groups) {
    const auto& ci = s.index(name);
    if (s.config().partition) {
      const auto pi = PartitionRecord::from_parts(parse_parts(*s.config().partition));
      s.out() << label(s.config().groups, name, multiset_orbit_count(ci, pi).get_str()) << '\n';
      continue;
    }
    if (s.config().groups.size() > 1) s.out() << "group " << name << '\n';
    for (const auto& pi : partitions_of(static_cast<int>(ci.degree))) {
      s.out() << "N " << pi.str() << ' ' << multiset_orbit_count(ci, pi) << '\n';
    }
  }
  return 0;
}

int run_wreath(Session& s) {
  const BigCount base = parse_count(s.config().base_s);
  s.out() << wreath_set_orbits(base, s.index(s.config().top)) << '\n';
  return 0;
}

int run_limit(Session& s) {
  const auto& cfg = s.config();
  const auto& top = s.index(cfg.top);
  const BigCount s0 = wreath_set_orbits(parse_count(cfg.base_s), top);
  const int n0 = 24 * static_cast<int>(top.degree);
  const auto precision = precision_for(cfg.digits);
  const auto enclosure = limit_enclosure(s0, n0, cfg.k, precision);
  s.out() << "s0 " << s0 << '\n'
          << "n0 " << n0 << '\n'
          << "k " << cfg.k << '\n'
          << "lo " << enclosure.lo_string(cfg.digits) << '\n'
          << "hi " << enclosure.hi_string(cfg.digits) << '\n'
          << "guarantee lo <= M <= hi; every rounding is outward at " << precision << " bits\n";
  return 0;
}

void verify_catalog(Session& s) {
  const auto& catalog = s.catalog();
  for (const auto& name : required_groups()) {
    const auto* g = catalog.find(name);
    s.check("catalog." + name, g != nullptr,
            g ? "degree " + std::to_string(g->degree) + " order " + g->bsgs.order().get_str()
              : "missing");
  }
  for (const auto& [degree, name] : kTableMaxima) {
    const auto& order = s.catalog().at(name).bsgs.order();
    const auto& expected = s.table().max_order(degree);
    s.check("catalog.table3.n=" + std::to_string(degree), order == expected,
            std::string(name) + " order " + order.get_str() + ", Table 3 " + expected.get_str());
  }
}

void verify_lemma3(Session& s, SetOrbitBounds& bounds) {
  std::map<std::string, BigCount> value;
  for (const auto& entry : kLemma3) {
    const auto& record = s.catalog().at(entry.group);
    const auto count = set_orbit_count(s.index(entry.group)).value;
    value[entry.group] = count;
    const std::string id = "lemma3." + std::string(entry.group);
    s.info(id, "degree " + std::to_string(record.degree) + " order " +
                   record.bsgs.order().get_str() + " s=" + count.get_str());
    if (entry.exact) {
      s.paper(id, count == entry.value, count.get_str(), std::to_string(entry.value));
    } else {
      s.check(id, count >= entry.value,
              "s=" + count.get_str() + " >= " + std::to_string(entry.value) + " (quoted lower bound)");
    }
  }
  s.note("lemma3.ASL(5,2): the quoted 361 is a random-search lower bound; exact value s=" +
         value["ASL(5,2)"].get_str());
  // Every constant the case analysis relies on must hold for the groups it covers.
  for (const auto& [degree, bound] : bounds) {
    std::vector<std::string> covered;
    for (const auto& g : s.catalog().records()) {
      if (static_cast<int>(g.degree) != degree || !value.count(g.name)) continue;
      if (degree == 24 && g.name == "M24") continue;
      covered.push_back(g.name);
    }
    for (const auto& name : covered) {
      s.check("lemma3.bound.n=" + std::to_string(degree) + "." + name, value[name] >= bound.value,
              "s=" + value[name].get_str() + " >= " + bound.value.get_str());
    }
  }
}

std::map<std::vector<int>, BigCount> verify_tables(Session& s) {
  const auto& ci = s.index("M12");
  const auto partitions = partitions_of(12);
  s.check("tables.partitions", partitions.size() == 77,
          std::to_string(partitions.size()) + " partitions of 12");
  const auto fixtures = load_orbit_fixtures(s.config().fixtures);
  std::map<std::vector<int>, BigCount> printed;
  for (const auto& f : fixtures) printed[f.parts] = f.expected;
  bool covered = printed.size() == fixtures.size() && printed.size() == partitions.size();
  std::map<std::vector<int>, BigCount> computed;
  BigCount total = 0;
  for (const auto& pi : partitions) {
    const auto n = multiset_orbit_count(ci, pi);
    computed[pi.parts] = n;
    auto it = printed.find(pi.parts);
    if (it == printed.end()) {
      covered = false;
      s.info("tables.N(" + pi.str() + ")", "computed=" + n.get_str() + " paper=absent");
      continue;
    }
    s.paper("tables.N(" + pi.str() + ")", n == it->second, n.get_str(), it->second.get_str());
  }
  s.check("tables.fixture_coverage", covered,
          std::to_string(fixtures.size()) + " fixture rows, one per partition");
  // Burnside on arrangements with B(π) colours: Σ N(π)·F... reduces to 12!/|M12| at (1^12).
  s.check("tables.regular_orbit", computed[std::vector<int>(12, 1)] * ci.group_order == factorial(12),
          "N(1^12)*|M12| = 12!");
  s.note("tables: the first table's caption names M24; its rows are orbits of M12 on degree-12 "
         "arrangements");
  if (!printed.empty() && covered) {
    s.info("tables.partitionwise_with_printed",
           "s(M24 wr M12) from the printed table = " +
               wreath_set_orbits_partitionwise(49, 12, printed).get_str());
  }
  return computed;
}

BigCount verify_wreath(Session& s, const std::map<std::vector<int>, BigCount>& computed) {
  const BigCount base = set_orbit_count(s.index("M24")).value;
  const auto& top = s.index("M12");
  const auto by_index = wreath_set_orbits(base, top);
  const auto by_partition = wreath_set_orbits_partitionwise(base, 12, computed);
  s.check("wreath.s0.agree", by_index == by_partition,
          "cycle index " + by_index.get_str() + ", partition-wise " + by_partition.get_str());
  for (long t : {1L, 2L, 13L, 105L}) {
    s.check("wreath.agree.s=" + std::to_string(t),
            wreath_set_orbits(t, top) == wreath_set_orbits_partitionwise(t, 12, computed), "");
  }
  s.paper("wreath.s0", by_index == BigCount(kPaperS0), by_index.get_str(), kPaperS0);
  s.note("wreath.s0: one sentence writes a_0 for s_0; the value is read as s_0");
  return by_index;
}

Enclosure verify_sequence(Session& s, const BigCount& s0) {
  const int digits = s.config().digits;
  const auto terms = sequence_terms(49, 24, s0, 12, 3, precision_for(digits));
  const auto tolerance = Enclosure::decimal("1e-15");
  for (const auto& t : terms) {
    s.info("sequence.k=" + std::to_string(t.k),
           "n=" + t.degree.get_str() + " a=" + t.a.str(digits) +
               (t.k <= 1 ? " s=" + t.s.get_str() : ""));
  }
  for (std::size_t i = 1; i + 1 < terms.size(); ++i) {
    const auto& a = terms[i].a;
    const int k = terms[i].k;
    if (k <= 2) {
      s.check("sequence.a" + std::to_string(k) + ".width", a.width().certainly_lt(tolerance),
              "width < 1e-15");
      const auto printed = decimal_rounding_interval(kPaperA[k]);
      s.paper("sequence.a" + std::to_string(k), a.intersects(printed), a.str(digits), kPaperA[k]);
    }
    s.check("sequence.decrease.k=" + std::to_string(k), terms[i + 1].a.certainly_lt(a),
            "a_" + std::to_string(k + 1) + " < a_" + std::to_string(k));
  }
  return terms[3].a;  // a_2
}

void verify_limit(Session& s, const BigCount& s0) {
  const int digits = std::max(s.config().digits, 22);
  const auto precision = precision_for(digits);
  const auto at2 = limit_enclosure(s0, 288, 2, precision);
  const auto at1 = limit_enclosure(s0, 288, 1, precision);
  const auto at0 = limit_enclosure(s0, 288, 0, precision);
  s.info("limit.k=2", at2.str(digits));
  s.check("limit.width", at2.width().certainly_le(Enclosure::decimal("1e-20")), "width <= 1e-20");
  s.check("limit.nested", at0.contains(at1) && at1.contains(at2), "k=2 inside k=1 inside k=0");
  const bool inside = at2.strictly_inside(Enclosure::decimal(kRemarkLo), Enclosure::decimal(kRemarkHi));
  s.paper("limit.remark", inside, at2.str(digits),
          std::string("(") + kRemarkLo + ", " + kRemarkHi + ")");
}

int run_verify(Session& s) {
  SetOrbitBounds bounds = quoted_set_orbit_bounds();
  s.section("catalog", [&] { verify_catalog(s); });
  s.section("lemma3", [&] { verify_lemma3(s, bounds); });
  std::map<std::vector<int>, BigCount> computed;
  s.section("tables", [&] { computed = verify_tables(s); });
  std::optional<BigCount> s0;
  s.section("wreath", [&] { s0 = verify_wreath(s, computed); });
  std::optional<Enclosure> beta;
  s.section("sequence", [&] {
    if (!s0) throw std::runtime_error("s0 unavailable");
    beta = verify_sequence(s, *s0);
    s.note("beta: the case analyses compare against the computed a_2 enclosure");
  });
  s.section("limit", [&] {
    if (!s0) throw std::runtime_error("s0 unavailable");
    verify_limit(s, *s0);
  });
  s.section("prop1", [&] {
    if (!beta) throw std::runtime_error("a_2 unavailable");
    s.cases(verify_prop1(s.table(), *beta, bounds));
    s.note("prop1.m=6: the case list skips m=6; s(H) >= 7 is checked in its place");
  });
  s.section("prop2", [&] {
    if (!beta) throw std::runtime_error("a_2 unavailable");
    s.cases(verify_prop2(s.table(), *beta));
  });
  s.section("thm3", [&] {
    if (!s0) throw std::runtime_error("s0 unavailable");
    s.cases(verify_thm3(s.table(), *s0));
  });
  s.section("alpha", [&] {
    s.cases(alpha_bound_check(s.table()));
    s.note("alpha: |P| <= 24^((n-1)/3) is checked against data; it does not follow from "
           "50*n^sqrt(n) as cited");
  });
  s.section("lemma4", [&] {
    if (!beta) throw std::runtime_error("a_2 unavailable");
    s.cases(verify_lemma4(*beta));
  });
  return s.finish();
}

}  // namespace

std::filesystem::path default_data_dir() {
#ifdef SETORBITS_DATA_DIR
  return SETORBITS_DATA_DIR;
#else
  return "data";
#endif
}

void validate(const RunConfig& config) {
  if (config.workers < 1) throw std::invalid_argument("--workers must be >= 1");
  if (config.digits < 1) throw std::invalid_argument("--digits must be >= 1");
  if (config.k < 0) throw std::invalid_argument("--k must be >= 0");
  const bool needs_group = config.command == Command::Order || config.command == Command::SetOrbits ||
                           config.command == Command::CycleIndex ||
                           config.command == Command::MultisetOrbits;
  if (needs_group && config.groups.empty()) throw std::invalid_argument("no group named");
}

int run(const RunConfig& config, std::ostream& report, std::ostream& status) {
  validate(config);
  Session session(config, report, status);
  switch (config.command) {
    case Command::Order: return run_order(session);
    case Command::SetOrbits: return run_set_orbits(session);
    case Command::CycleIndex: return run_cycle_index(session);
    case Command::MultisetOrbits: return run_multiset_orbits(session);
    case Command::Wreath: return run_wreath(session);
    case Command::Limit: return run_limit(session);
    case Command::VerifyPaper: return run_verify(session);
  }
  return 2;
}

}  // namespace setorbits
