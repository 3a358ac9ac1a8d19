#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "setorbits/bigcount.hpp"
#include "setorbits/bsgs.hpp"
#include "setorbits/permutation.hpp"

namespace setorbits {

/// Malformed input file; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct GroupRecord {
  std::string name;
  std::size_t degree = 0;
  BigCount expected_order;
  std::vector<Permutation> generators;
  StrongGenSet bsgs;  // order verified against expected_order at load time
};

class Catalog {
public:
  explicit Catalog(std::vector<GroupRecord> records);

  const std::vector<GroupRecord>& records() const { return records_; }
  /// Throws std::out_of_range naming the group when absent.
  const GroupRecord& at(const std::string& name) const;
  const GroupRecord* find(const std::string& name) const;

private:
  std::vector<GroupRecord> records_;
};

/// Parses the generator catalog format:
///
///   group <name> degree <n> order <expected-order>
///   (1,2,3)(4,5)
///   ...
///   <blank line>
///
/// '#' starts a comment line. Each record's BSGS order must equal its order
/// field, otherwise std::runtime_error naming the group is thrown.
std::vector<GroupRecord> parse_catalog(std::istream& in, const std::string& source = "<catalog>");
Catalog load_catalog(const std::filesystem::path& path);

/// Names every full verification run needs.
std::vector<std::string> required_groups();

struct PrimitiveOrderRow {
  int degree = 0;
  std::optional<BigCount> max_order;     // absent for "N/A"
  std::optional<BigCount> second_order;
};

/// Maximum orders of primitive groups not containing A_n, by degree.
class OrderTable {
public:
  explicit OrderTable(std::vector<PrimitiveOrderRow> rows);
  const std::vector<PrimitiveOrderRow>& rows() const { return rows_; }
  const PrimitiveOrderRow* row(int degree) const;
  /// Throws std::out_of_range naming the degree when the row or its maximum is missing.
  const BigCount& max_order(int degree) const;

private:
  std::vector<PrimitiveOrderRow> rows_;
};

/// Lines `order <degree> <max> [<second>]` or `order <degree> N/A`.
OrderTable parse_order_table(std::istream& in, const std::string& source = "<table3>");
OrderTable load_order_table(const std::filesystem::path& path);

/// Expected multiset orbit counts, lines `N <parts> <count>`; keyed by parts
/// sorted descending, in file order.
struct OrbitFixture {
  std::vector<int> parts;
  BigCount expected;
};
std::vector<OrbitFixture> parse_orbit_fixtures(std::istream& in, const std::string& source = "<fixtures>");
std::vector<OrbitFixture> load_orbit_fixtures(const std::filesystem::path& path);

}  // namespace setorbits
