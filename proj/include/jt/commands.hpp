#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "jt/suites.hpp"

namespace jt {

using Json = nlohmann::ordered_json;

struct CommandArgs {
  std::string command;
  std::optional<std::string> input;
  std::optional<std::size_t> i, j, m;
  std::optional<std::string> at, alpha, construction, suite;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::optional<std::size_t> replay_trial;
  SuiteConfig config;
};

enum ExitCode : int { kOk = 0, kFailed = 1, kPrecondition = 2, kParse = 3 };

struct Outcome {
  Json report;
  int exit_code = kOk;
};

// Never throws for mathematical or input errors; they become an error report.
Outcome run_command(const CommandArgs& args);

// One "key: value" line per leaf, nested keys joined by dots.
std::string render_text(const Json& report);

}  // namespace jt
