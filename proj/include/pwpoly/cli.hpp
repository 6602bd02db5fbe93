#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pwpoly/rational.hpp"
#include "pwpoly/report.hpp"
#include "pwpoly/rootsys.hpp"
#include "pwpoly/weyl.hpp"

namespace pwpoly {

inline constexpr const char* kVersion = "0.1.0";

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct JobSpec {
  std::string command;  // hpoly | fvector | facets | verify | sweep | export
  std::string suite;    // verify only
  RSType type{Family::A, 2};
  std::vector<int> K;
  bool all_K = false;  // verify only
  std::string method = "all";
  std::string format = "text";
  std::optional<std::string> out;
  std::optional<RVec> anchor;
  unsigned workers = 1;
  std::uint64_t budget = kDefaultBudget;
};

inline const std::vector<std::string>& verify_suites()
{
  static const std::vector<std::string> suites{"orbit-product", "c-coeffs",  "c-vanishing", "phi-kernel",
                                               "deg2-surjectivity", "geometry", "cross-method"};
  return suites;
}

/// Parses argv (argv[0] is the program name). Throws UsageError.
JobSpec parse_job(const std::vector<std::string>& args);

struct Report {
  nlohmann::json json;             // job, results, checks, version
  std::vector<std::string> lines;  // human-readable rendering
  int exit_code = 0;               // 0 ok, 2 some check failed
};

/// Throws UsageError for invalid jobs and BudgetExceeded when the budget is too small.
Report run(const JobSpec& job);

/// Full command-line behaviour: parse, run, write the report, return the exit code.
/// Timing goes to err so that out is byte-identical across runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pwpoly
