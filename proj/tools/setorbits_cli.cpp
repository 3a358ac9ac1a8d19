#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "setorbits/report.hpp"

int main(int argc, char** argv) {
  using setorbits::Command;
  setorbits::RunConfig config;
  const auto data = setorbits::default_data_dir();
  config.catalog = data / "catalog.txt";
  config.table3 = data / "table3.txt";
  config.fixtures = data / "m12_multiset_orbits.txt";
  std::string out_path;
  bool quiet = false;

  CLI::App app{"Exact set-orbit counting for permutation groups"};
  app.require_subcommand(1);
  app.add_option("--catalog", config.catalog, "generator catalog file");
  app.add_option("--table3", config.table3, "maximum primitive orders file");
  app.add_option("--fixtures", config.fixtures, "expected N(pi) values for M12");
  app.add_option("--workers", config.workers, "enumeration threads")->check(CLI::PositiveNumber);
  app.add_option("--digits", config.digits, "decimal digits in enclosures")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_flag("--quiet", quiet, "no progress on stderr");

  auto* order = app.add_subcommand("order", "exact group order");
  order->add_option("groups", config.groups, "catalog names")->required();
  auto* set_orbits = app.add_subcommand("set-orbits", "number of orbits on subsets");
  set_orbits->add_option("groups", config.groups, "catalog names")->required();
  auto* cycle_index = app.add_subcommand("cycle-index", "cycle-type census");
  cycle_index->add_option("groups", config.groups, "catalog names")->required();
  auto* multiset = app.add_subcommand("multiset-orbits", "orbits on arrangements of given content");
  multiset->add_option("groups", config.groups, "catalog names")->required();
  multiset->add_option("--partition", config.partition, "content as a comma list, e.g. 3,3,2,1,1,1,1");
  auto* wreath = app.add_subcommand("wreath", "set-orbits of H wr T from s(H) and T");
  wreath->add_option("--base-s", config.base_s, "s(H)");
  wreath->add_option("--top", config.top, "catalog name of T");
  auto* limit = app.add_subcommand("limit", "enclosure of lim a_k");
  limit->add_option("--k", config.k, "tower level")->check(CLI::NonNegativeNumber);
  limit->add_option("--base-s", config.base_s, "s(H) at the bottom");
  limit->add_option("--top", config.top, "catalog name of the first top group");
  auto* verify = app.add_subcommand("verify-paper", "full verification report");
  verify->add_flag("--strict", config.strict, "published-value mismatches also fail");

  // Global options are accepted after the subcommand too.
  for (auto* sub : {order, set_orbits, cycle_index, multiset, wreath, limit, verify}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  if (*order) config.command = Command::Order;
  if (*set_orbits) config.command = Command::SetOrbits;
  if (*cycle_index) config.command = Command::CycleIndex;
  if (*multiset) config.command = Command::MultisetOrbits;
  if (*wreath) config.command = Command::Wreath;
  if (*limit) config.command = Command::Limit;
  if (*verify) config.command = Command::VerifyPaper;
  config.progress = !quiet;

  try {
    if (out_path.empty()) return setorbits::run(config, std::cout, std::cerr);
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return 2;
    }
    return setorbits::run(config, out, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
