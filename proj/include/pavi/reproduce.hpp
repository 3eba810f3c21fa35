#pragma once

#include <string>
#include <vector>

namespace pavi {

/// Outcome of one frozen reproduction target.
struct ReproduceResult {
  std::string target;
  bool pass = false;
  std::string detail;
};

/// The named one-shot checks, in run order.
const std::vector<std::string>& reproduce_target_names();

/// Runs one target, or every target for "all". Unknown names throw
/// std::invalid_argument. All parameters are frozen in one table
/// (see seed_table()).
std::vector<ReproduceResult> run_reproduce(const std::string& target);

/// Human-readable dump of the frozen parameter table behind the targets.
std::string seed_table();

}  // namespace pavi
