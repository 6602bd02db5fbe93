#pragma once

#include <string>
#include <vector>

namespace pwpoly {

/// One named pass/fail outcome with a human-readable detail (counterexample on failure).
struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

inline bool all_pass(const std::vector<Check>& checks)
{
  for (const auto& c : checks)
    if (!c.pass)
      return false;
  return true;
}

} // namespace pwpoly
