#pragma once

#include <functional>
#include <string>
#include <vector>

#include <polyreal/char_table.hpp>

namespace polyreal::cli {

struct SuiteRow {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// The reference reproduction checks, in a fixed order. `progress` is called
/// after each check.
std::vector<SuiteRow> run_suite(const TableOptions& options,
                                const std::function<void(const SuiteRow&)>& progress = {});

}  // namespace polyreal::cli
