#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jt/bitriangle.hpp"
#include "jt/field.hpp"
#include "jt/random.hpp"

namespace jt {

struct SuiteConfig {
  std::size_t max_dim = 6;  // dim E for random matrix tuples
  unsigned jobs = 0;        // 0: hardware concurrency
};

struct SuiteInfo {
  std::string name;
  std::string theorem;
};

const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo& suite_info(const std::string& name);  // throws ParseError for unknown names

struct TrialResult {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;  // the first few failed checks

  bool ok() const { return failures.empty(); }
};

struct SuiteReport {
  SuiteInfo info;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  std::vector<TrialResult> failed;

  bool ok() const { return failed.empty(); }
};

// Trial k draws from Rng(trial_seed(seed, k)); exceptions count as failures.
TrialResult run_trial(const std::string& suite, std::size_t k, std::uint64_t seed, const SuiteConfig& cfg = {});
// Trials may run concurrently; results are aggregated in trial order.
SuiteReport run_suite(const std::string& suite, std::size_t trials, std::uint64_t seed, const SuiteConfig& cfg = {});

// The bitriangles drawn by trial k of the bitriangle and comparison-quotient
// suites: k % 4 in {0, 1} triviality bitriangles of a matrix triple (all i < j),
// 2 X(m) and X(1) for matrix tuples, 3 X(m) and X(1) over F[z].
struct BitriangleRun {
  std::string label;
  BitriangleReport validation;
  ComparisonReport comparison;
  Scalar direct_quotients;  // comparison_via_quotients on the homology endomorphisms
};
std::vector<BitriangleRun> bitriangle_runs(std::size_t k, std::uint64_t seed, const SuiteConfig& cfg = {});

}  // namespace jt
