#pragma once

#include <cstddef>
#include <vector>

#include "fibgreedy/numeric.hpp"
#include "fibgreedy/sequences.hpp"

namespace fibgreedy {

// Which index pairs count as two-term sums.
//   allow_repeat: 1 <= m <= n, so 1/a_m + 1/a_m is a candidate.
//   distinct:     1 <= m <  n.
enum class PairRule { allow_repeat, distinct };

// 1/a_m + 1/a_n.
struct TwoTermSum {
  Index m = 0;
  Index n = 0;
  Rational value;

  friend bool operator==(const TwoTermSum&, const TwoTermSum&) = default;
};

TwoTermSum make_two_term(const SequenceParams& params, Index m, Index n);

struct GreedyResult {
  Index g1 = 0;
  Index g2 = 0;
  Rational value;  // 1/a_{g1} + 1/a_{g2}, strictly below theta
};

struct GreedyPrefix {
  std::vector<Index> indices;  // non-decreasing
  Rational partial_sum;
};

inline constexpr std::size_t kDefaultMaxTerms = 64;

// Throws DomainError unless 0 < theta <= 1.
void require_unit_interval(const Rational& theta);

// Smallest n >= 1 with 1/a_n < theta.
Index greedy_first(const SequenceParams& params, const Rational& theta);

// g1, then the smallest g2 >= g1 (> g1 under PairRule::distinct) with
// 1/a_{g2} < theta - 1/a_{g1}.
GreedyResult greedy_two_term(const SequenceParams& params, const Rational& theta,
                             PairRule rule = PairRule::allow_repeat);

// First k greedy terms. Throws LimitError when k > max_terms and
// std::invalid_argument when k == 0.
GreedyPrefix greedy_prefix(const SequenceParams& params, const Rational& theta, std::size_t k,
                           std::size_t max_terms = kDefaultMaxTerms);

}  // namespace fibgreedy
