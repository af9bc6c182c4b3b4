#pragma once

#include <string>
#include <vector>

#include "cli/document.hpp"
#include "cli/json_emit.hpp"

namespace locmult {

struct CommandOptions {
  unsigned max_degree = 40;
  unsigned max_n = 24;
  unsigned window = 3;
  unsigned certificate_degree = 12;
  std::string order = "grevlex";
  bool equidim = false;
  bool timing = false;

  LocalConfig local() const;
};

struct CommandOutput {
  // ReportDocument: command, arguments, version, result (+ timing_ms).
  Json document;
  std::string text;
  // The command ran but an asserted check did not hold (exit status 1).
  bool failed = false;
};

// Commands: gb I | mult I | tangent I | hs I n | chi I J | report I J |
// samuel I J | psi I J | dimcut I J | divisor I f t | additivity I C | format.
// Throws Error subclasses on failure.
CommandOutput run_command(const SourceDocument& doc, const std::string& command, const std::vector<std::string>& args,
                          const CommandOptions& options);

const std::vector<std::string>& command_names();

}  // namespace locmult
