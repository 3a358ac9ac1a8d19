#include "setorbits/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace setorbits {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

// Calls `handle(line_number, text)` for every non-blank, non-comment line;
// `blank(line_number)` for blank ones.
void for_each_line(std::istream& in, const std::function<void(std::size_t, const std::string&)>& handle,
                   const std::function<void(std::size_t)>& blank = {}) {
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string line = trim(raw);
    if (line.empty()) {
      if (blank) blank(number);
      continue;
    }
    if (line.front() == '#') continue;
    handle(number, line);
  }
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

Catalog::Catalog(std::vector<GroupRecord> records) : records_(std::move(records)) {}

const GroupRecord* Catalog::find(const std::string& name) const {
  for (const auto& r : records_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const GroupRecord& Catalog::at(const std::string& name) const {
  if (const auto* r = find(name)) return *r;
  throw std::out_of_range("group '" + name + "' is not in the catalog");
}

std::vector<GroupRecord> parse_catalog(std::istream& in, const std::string& source) {
  struct Pending {
    std::string name;
    std::size_t degree = 0;
    BigCount order;
    std::size_t header_line = 0;
    std::vector<Permutation> generators;
  };
  std::vector<GroupRecord> out;
  std::optional<Pending> pending;

  auto finish = [&](std::size_t line) {
    if (!pending) return;
    if (pending->generators.empty()) {
      throw ParseError(source, line, "group " + pending->name + " has no generators");
    }
    GroupRecord record;
    record.name = pending->name;
    record.degree = pending->degree;
    record.expected_order = pending->order;
    record.generators = std::move(pending->generators);
    record.bsgs = schreier_sims(record.generators);
    if (record.bsgs.order() != record.expected_order) {
      throw std::runtime_error("group " + record.name + ": generators have order " +
                               record.bsgs.order().get_str() + ", expected " +
                               record.expected_order.get_str());
    }
    out.push_back(std::move(record));
    pending.reset();
  };

  std::size_t last_line = 0;
  for_each_line(
      in,
      [&](std::size_t number, const std::string& line) {
        last_line = number;
        if (line.rfind("group", 0) == 0) {
          finish(number);
          std::istringstream fields(line);
          std::string kw_group, name, kw_degree, kw_order, order_text;
          long degree = 0;
          if (!(fields >> kw_group >> name >> kw_degree >> degree >> kw_order >> order_text) ||
              kw_degree != "degree" || kw_order != "order") {
            throw ParseError(source, number, "expected 'group <name> degree <n> order <order>'");
          }
          if (degree < 1 || static_cast<std::size_t>(degree) > kMaxDegree) {
            throw ParseError(source, number, "degree out of range");
          }
          Pending p;
          p.name = name;
          p.degree = static_cast<std::size_t>(degree);
          try {
            p.order = parse_count(order_text);
          } catch (const std::invalid_argument& e) {
            throw ParseError(source, number, e.what());
          }
          p.header_line = number;
          pending = std::move(p);
          return;
        }
        if (!pending) throw ParseError(source, number, "generator outside a group record");
        try {
          pending->generators.push_back(Permutation::parse_cycles(line, pending->degree));
        } catch (const std::invalid_argument& e) {
          throw ParseError(source, number, e.what());
        }
      },
      [&](std::size_t number) {
        last_line = number;
        finish(number);
      });
  finish(last_line);
  return out;
}

Catalog load_catalog(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return Catalog(parse_catalog(in, path.string()));
}

std::vector<std::string> required_groups() {
  return {
      // Lemma-3 witnesses, degrees 14..32
      "PGL(2,13)", "PSL(4,2)", "AGL(4,2)", "PGammaL(2,16)", "PGammaL(3,4)", "M22", "M22.2",
      "M23", "M24", "ASL(5,2)",
      // second-largest orders quoted at degrees 23, 24 and 32
      "AGL(1,23)", "PGL(2,23)", "PGL(2,31)",
      // wreath top and its point stabiliser
      "M12", "M11",
      // symmetric groups for stars-and-bars and small test groups
      "S2", "S3", "S4", "S5", "S6", "S7", "S8", "C3", "C2wrC2", "C2wrS3",
  };
}

OrderTable::OrderTable(std::vector<PrimitiveOrderRow> rows) : rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end(),
            [](const auto& a, const auto& b) { return a.degree < b.degree; });
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    if (rows_[i].degree == rows_[i - 1].degree) {
      throw std::invalid_argument("order table: duplicate degree " + std::to_string(rows_[i].degree));
    }
  }
  for (const auto& r : rows_) {
    if (r.max_order && r.second_order && *r.second_order > *r.max_order) {
      throw std::invalid_argument("order table: second order exceeds maximum at degree " +
                                  std::to_string(r.degree));
    }
  }
}

const PrimitiveOrderRow* OrderTable::row(int degree) const {
  for (const auto& r : rows_) {
    if (r.degree == degree) return &r;
  }
  return nullptr;
}

const BigCount& OrderTable::max_order(int degree) const {
  const auto* r = row(degree);
  if (!r || !r->max_order) {
    throw std::out_of_range("order table has no maximum order for degree " + std::to_string(degree));
  }
  return *r->max_order;
}

OrderTable parse_order_table(std::istream& in, const std::string& source) {
  std::vector<PrimitiveOrderRow> rows;
  for_each_line(in, [&](std::size_t number, const std::string& line) {
    std::istringstream fields(line);
    std::string keyword, max_text, second_text;
    int degree = 0;
    if (!(fields >> keyword >> degree >> max_text) || keyword != "order") {
      throw ParseError(source, number, "expected 'order <degree> <max> [<second>]'");
    }
    PrimitiveOrderRow row;
    row.degree = degree;
    try {
      if (max_text != "N/A") row.max_order = parse_count(max_text);
      if (fields >> second_text) row.second_order = parse_count(second_text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, number, e.what());
    }
    rows.push_back(std::move(row));
  });
  return OrderTable(std::move(rows));
}

OrderTable load_order_table(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_order_table(in, path.string());
}

std::vector<OrbitFixture> parse_orbit_fixtures(std::istream& in, const std::string& source) {
  std::vector<OrbitFixture> out;
  for_each_line(in, [&](std::size_t number, const std::string& line) {
    std::istringstream fields(line);
    std::string keyword, parts_text, count_text;
    if (!(fields >> keyword >> parts_text >> count_text) || keyword != "N") {
      throw ParseError(source, number, "expected 'N <parts> <count>'");
    }
    OrbitFixture fixture;
    std::istringstream parts(parts_text);
    std::string piece;
    while (std::getline(parts, piece, ',')) {
      try {
        const int value = std::stoi(piece);
        if (value <= 0) throw std::invalid_argument("non-positive part");
        fixture.parts.push_back(value);
      } catch (const std::exception&) {
        throw ParseError(source, number, "bad partition '" + parts_text + "'");
      }
    }
    std::sort(fixture.parts.begin(), fixture.parts.end(), std::greater<>());
    try {
      fixture.expected = parse_count(count_text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, number, e.what());
    }
    out.push_back(std::move(fixture));
  });
  return out;
}

std::vector<OrbitFixture> load_orbit_fixtures(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_orbit_fixtures(in, path.string());
}

}  // namespace setorbits
