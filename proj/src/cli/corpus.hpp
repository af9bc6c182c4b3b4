#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cli/commands.hpp"

namespace locmult {

struct FixtureSource {
  std::string name;
  std::string_view text;
};

// Fixtures compiled into the library, sorted by name.
const std::vector<FixtureSource>& embedded_corpus();

struct DirectiveOutcome {
  std::string directive;
  std::string tag;
  std::string actual;
  bool ok = false;
  std::string error;
};

struct FixtureOutcome {
  std::string name;
  std::vector<std::string> suites;
  std::vector<DirectiveOutcome> results;
  bool passed = false;
  // Set when the fixture itself fails to parse.
  std::string error;
};

FixtureOutcome evaluate_fixture(const std::string& name, std::string_view text, const LocalConfig& config = {});

// "all" and "paper" select every fixture; otherwise fixtures listing the
// suite.  Fixtures run concurrently; the result is sorted by name.
std::vector<FixtureOutcome> run_corpus(const std::string& suite, const LocalConfig& config = {},
                                       unsigned threads = 0);

Json fixture_json(const FixtureOutcome& outcome);

// Appends one JSON line per outcome, in the given order.
void append_ledger(const std::string& path, const std::vector<FixtureOutcome>& outcomes);

CommandOutput corpus_command(const std::string& suite, const std::string& ledger, const CommandOptions& options);

}  // namespace locmult
