#include "fibgreedy/oracle.hpp"

#include <optional>
#include <stdexcept>

#include "fibgreedy/errors.hpp"
#include "fibgreedy/optimality.hpp"

namespace fibgreedy {

OracleReport oracle_best(const SequenceParams& params, const Rational& theta, std::size_t extra_depth,
                         PairRule rule) {
  require_unit_interval(theta);
  if (extra_depth == 0) throw std::invalid_argument("oracle extra_depth must be at least 1");

  OracleReport report;

  // m below first_feasible has 1/a_m >= theta and admits no partner.
  Index first = 1;
  while (!(Rational::unit(params.term(first)) < theta)) ++first;
  report.first_feasible = first;
  report.search_bound = first + extra_depth;

  std::optional<TwoTermSum> best;
  for (Index m = first; m <= report.search_bound; ++m) {
    const Rational head = Rational::unit(params.term(m));
    Index n = rule == PairRule::distinct ? m + 1 : m;
    for (;; ++n) {
      ++report.candidates_examined;
      Rational sum = head + Rational::unit(params.term(n));
      if (sum < theta) {
        if (!best || sum > best->value) best = TwoTermSum{m, n, std::move(sum)};
        break;
      }
    }
  }
  report.best = std::move(*best);
  return report;
}

bool competitor_shape_check(const SequenceParams& params, const Rational& theta, PairRule rule) {
  const Classification c = classify(params, theta, rule);
  if (c.is_best) {
    throw ContractError("competitor_shape_check requires a theta where greedy is not best, got " +
                        format_rational(theta));
  }
  const OracleReport report = oracle_best(params, theta, kDefaultExtraDepth, rule);
  return report.best.m == c.greedy.g1 + 1 && report.best.n == c.greedy.g1 + 2;
}

}  // namespace fibgreedy
