#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibgreedy/greedy.hpp"
#include "fibgreedy/oracle.hpp"
#include "fibgreedy/sequences.hpp"

namespace fibgreedy {

struct SuiteResult {
  SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_counterexample;

  bool passed() const { return failures == 0; }

  // Counts one check; records the message of the first failure.
  void record(bool ok, const std::string& counterexample_if_failed);
};

struct VerifyOptions {
  Index max_n = 300;           // cassini-like, positivity, xi and closed-form suites
  Index shift_max = 50;        // shift identity for 0 <= n, m <= shift_max
  Index recurrence_max = 500;  // recurrence vs closed formula, growth
  std::int64_t fib_range = 30; // addition formula for -fib_range <= n, m <= fib_range
  std::size_t grid_denominator = 1000;
  std::size_t extra_depth = kDefaultExtraDepth;
  PairRule rule = PairRule::allow_repeat;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool passed() const;
  std::size_t total_checks() const;
  std::size_t total_failures() const;
};

SuiteResult verify_fib_addition(std::int64_t range);
SuiteResult verify_recurrence_formula(const SequenceParams& params, Index max_n);
SuiteResult verify_growth(const SequenceParams& params, Index max_n);
SuiteResult verify_shift_identity(const SequenceParams& params, Index max_nm);
SuiteResult verify_cassini_like(const SequenceParams& params, Index max_n);

// 1/a_{2n+1} - 1/a_{2n+2} - 1/a_{2n+3} > 0,
// 1/a_{2n+3} + 1/a_{2n+4} - 1/a_{2n+2} > 0,
// 1/a_{2n+2} - 1/a_{2n+3} - 1/a_{2n+5} > 0.
SuiteResult verify_positivity(const SequenceParams& params, Index max_n);

// Per n: integer and literal xi agree, xi is admissible and maximal in both
// the integer and the reciprocal form, the endpoint identity and ordering
// hold, the interval nests inside (1/a_{2n+2}, 1/a_{2n+1}) and lies
// strictly above interval n+1.
SuiteResult verify_xi(const SequenceParams& params, Index max_n);

// xi(n) against the preset closed form. Fails for custom presets.
SuiteResult verify_closed_form(const SequencePreset& preset, Index max_n);

// Sweep theta = k/denominator, k = 1..denominator.
struct GridSuites {
  SuiteResult equivalence;     // classify.is_best <=> greedy value == oracle value
  SuiteResult dominance;       // oracle value >= greedy value, oracle value < theta
  SuiteResult truncation;      // oracle winner m <= g1 + 1
  SuiteResult competitor;      // !is_best => winner == (g1+1, g1+2)
  SuiteResult scan_agreement;  // classify == classify_by_scan
};

GridSuites verify_grid(const SequenceParams& params, std::size_t denominator, PairRule rule,
                       std::size_t extra_depth = kDefaultExtraDepth);

// Every suite above for one sequence. The closed-form suite only runs for
// presets that have one.
VerifyReport run_verification(const SequencePreset& preset, const VerifyOptions& options);

}  // namespace fibgreedy
