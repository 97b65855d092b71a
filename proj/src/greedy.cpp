#include "fibgreedy/greedy.hpp"

#include <stdexcept>
#include <string>

#include "fibgreedy/errors.hpp"

namespace fibgreedy {

namespace {

// Smallest n >= start with 1/a_n < r, for r > 0. Since r = p/q, the test is
// a_n * p > q. Terminates because a_n grows without bound.
Index first_index_below(const SequenceParams& params, const Rational& r, Index start) {
  const Integer& p = r.numerator();
  const Integer& q = r.denominator();
  Index n = start;
  while (params.term(n) * p <= q) ++n;
  return n;
}

}  // namespace

TwoTermSum make_two_term(const SequenceParams& params, Index m, Index n) {
  return {m, n, Rational::unit(params.term(m)) + Rational::unit(params.term(n))};
}

void require_unit_interval(const Rational& theta) {
  if (theta.sign() <= 0 || theta > Rational(1)) {
    throw DomainError("theta must lie in (0, 1], got " + format_rational(theta));
  }
}

Index greedy_first(const SequenceParams& params, const Rational& theta) {
  require_unit_interval(theta);
  return first_index_below(params, theta, 1);
}

GreedyResult greedy_two_term(const SequenceParams& params, const Rational& theta, PairRule rule) {
  const Index g1 = greedy_first(params, theta);
  const Rational rest = theta - Rational::unit(params.term(g1));
  const Index g2 = first_index_below(params, rest, rule == PairRule::distinct ? g1 + 1 : g1);
  return {g1, g2, Rational::unit(params.term(g1)) + Rational::unit(params.term(g2))};
}

GreedyPrefix greedy_prefix(const SequenceParams& params, const Rational& theta, std::size_t k,
                           std::size_t max_terms) {
  require_unit_interval(theta);
  if (k == 0) throw std::invalid_argument("term count must be at least 1");
  if (k > max_terms) {
    throw LimitError("term count " + std::to_string(k) + " exceeds limit " + std::to_string(max_terms));
  }

  GreedyPrefix prefix;
  prefix.indices.reserve(k);
  Rational rest = theta;
  Index n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n = first_index_below(params, rest, n);
    prefix.indices.push_back(n);
    rest = rest - Rational::unit(params.term(n));
  }
  prefix.partial_sum = theta - rest;
  return prefix;
}

}  // namespace fibgreedy
