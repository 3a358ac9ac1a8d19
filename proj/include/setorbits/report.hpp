#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace setorbits {

enum class Command { Order, SetOrbits, CycleIndex, MultisetOrbits, Wreath, Limit, VerifyPaper };

struct RunConfig {
  Command command = Command::VerifyPaper;
  std::vector<std::string> groups;
  std::filesystem::path catalog;
  std::filesystem::path table3;
  std::filesystem::path fixtures;
  unsigned workers = 1;
  int digits = 19;
  int k = 2;
  std::string base_s = "49";
  std::string top = "M12";
  std::optional<std::string> partition;  // multiset-orbits; all partitions when absent
  bool strict = false;                   // verify-paper: paper-value mismatches fail too
  bool progress = true;
};

/// Default data files shipped with the source tree.
std::filesystem::path default_data_dir();

/// Throws std::invalid_argument when a field is out of range.
void validate(const RunConfig& config);

/// Runs one command. Results go to `report`, progress to `status`.
/// Returns the process exit status: 0 iff every required check passed.
int run(const RunConfig& config, std::ostream& report, std::ostream& status);

}  // namespace setorbits
