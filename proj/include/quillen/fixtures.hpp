#pragma once

#include <string>
#include <vector>

namespace quillen {

struct FixtureCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The worked Z[x,y] session: normalization, local loop, patching, row
/// solution, completion, projectivity and free basis of the kernel.
std::vector<FixtureCheck> run_worked_session();

}  // namespace quillen
