#pragma once

#include <cstddef>

#include "fibgreedy/greedy.hpp"
#include "fibgreedy/numeric.hpp"
#include "fibgreedy/sequences.hpp"

namespace fibgreedy {

struct OracleReport {
  TwoTermSum best;
  Index first_feasible = 0;  // smallest m with 1/a_m < theta, found independently of the greedy code
  Index search_bound = 0;    // largest m examined
  std::size_t candidates_examined = 0;

  // For m >= first_feasible + 2 no sum can beat the greedy pair, because
  // a_{k+2} > 2 a_k. The winner must therefore sit at m <= first_feasible + 1.
  bool truncation_sound() const { return best.m <= first_feasible + 1; }
};

inline constexpr std::size_t kDefaultExtraDepth = 8;

/**
 * Exhaustive search for the largest 1/a_m + 1/a_n strictly below theta.
 *
 * For each m in [first_feasible, first_feasible + extra_depth] the smallest
 * admissible partner n maximizes the sum, so only that n is kept. Ties go to
 * the lexicographically smallest (m, n). extra_depth must be at least 1.
 */
OracleReport oracle_best(const SequenceParams& params, const Rational& theta,
                         std::size_t extra_depth = kDefaultExtraDepth, PairRule rule = PairRule::allow_repeat);

// Requires classify(params, theta, rule).is_best == false (ContractError
// otherwise). True iff the oracle winner is (g1+1, g1+2).
bool competitor_shape_check(const SequenceParams& params, const Rational& theta,
                            PairRule rule = PairRule::allow_repeat);

}  // namespace fibgreedy
