#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gpdkit/json_io.hpp"

namespace gpdkit::cli {

  enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kInputError = 2 };

  struct RunConfig {
    std::string              command;
    std::vector<std::string> inputs;
    std::uint64_t            seed   = 0;
    double                   tol    = 1e-9;
    std::size_t              bound  = 10000;
    std::size_t              dim    = 3;
    std::size_t              budget = 2'000'000;
    std::string              out;

    Json to_json() const;
  };

  struct Outcome {
    int  code = kSuccess;
    Json report;
  };

  Outcome cmd_validate(RunConfig const& config);
  Outcome cmd_factor(RunConfig const& config);
  Outcome cmd_morita(RunConfig const& config);
  Outcome cmd_nerve_suite(RunConfig const& config);
  Outcome cmd_fixture(RunConfig const& config);

  // Parses argv, dispatches, writes the report to --out or `out`, and
  // returns the exit code. Usage errors go to `err`.
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gpdkit::cli
