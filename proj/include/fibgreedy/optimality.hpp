#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fibgreedy/greedy.hpp"
#include "fibgreedy/numeric.hpp"
#include "fibgreedy/sequences.hpp"

namespace fibgreedy {

/**
 * xi(n): the largest xi >= 0 with
 *
 *   a_{2n+2} F_xi + a_{2n+3} F_{xi+1} <= a_{2n+2} a_{2n+3} a_{2n+4} / chi.
 *
 * The left side collapses to a_{2n+3+xi} by the shift identity, so the
 * search runs on integers only: a_{2n+3+xi} * chi <= bound.
 */
struct XiResult {
  Index n = 0;
  Index xi = 0;
  Integer bound;  // a_{2n+2} a_{2n+3} a_{2n+4}
  Integer chi;
};

XiResult xi(const SequenceParams& params, Index n);

// Same quantity, evaluated literally with Fibonacci factors and a rational
// right-hand side. Used to cross-check xi().
Index xi_literal(const SequenceParams& params, Index n);

// 4n+4 for fibonacci, 4n+6 for lucas. Throws UnsupportedPreset for custom.
Index xi_closed_form(const SequencePreset& preset, Index n);

// Half-open window (left, right] where the greedy pair is beaten:
//   left  = 1/a_{2n+3} + 1/a_{2n+4}
//   right = 1/a_{2n+2} + 1/a_{2n+3+xi(n)}
struct BadInterval {
  Index n = 0;
  Index xi = 0;
  Rational left;
  Rational right;

  bool contains(const Rational& theta) const { return left < theta && theta <= right; }
};

BadInterval bad_interval(const SequenceParams& params, Index n);

// Describes the first violated invariant of `interval`, or nothing:
// left <= right, 1/a_{2n+2} < left, right < 1/a_{2n+1}, and xi maximality.
std::optional<std::string> interval_violation(const SequenceParams& params, const BadInterval& interval);

// Intervals n = 0 .. count-1, invariant-checked, strictly decreasing.
// Throws std::logic_error if any invariant fails.
std::vector<BadInterval> interval_table(const SequenceParams& params, std::size_t count);

struct Classification {
  Rational theta;
  GreedyResult greedy;
  bool is_best = true;
  std::optional<BadInterval> witness_interval;  // present iff !is_best
  std::optional<TwoTermSum> competitor;         // (2m+3, 2m+4) iff !is_best
};

// Decides whether the greedy pair is the best two-term underapproximation.
// Odd g1 is always best; for g1 = 2m+2 only interval m can contain theta.
Classification classify(const SequenceParams& params, const Rational& theta,
                        PairRule rule = PairRule::allow_repeat);

// Debug variant: tests theta against every interval in `intervals` (e.g. an
// interval_table) instead of the single candidate picked by g1.
Classification classify_by_scan(const SequenceParams& params, const Rational& theta,
                                const std::vector<BadInterval>& intervals, PairRule rule = PairRule::allow_repeat);

}  // namespace fibgreedy
