#include "fibgreedy/optimality.hpp"

#include <stdexcept>

#include "fibgreedy/errors.hpp"

namespace fibgreedy {

XiResult xi(const SequenceParams& params, Index n) {
  XiResult result;
  result.n = n;
  result.chi = params.chi();
  result.bound = params.term(2 * n + 2) * params.term(2 * n + 3) * params.term(2 * n + 4);

  // xi = 0 always qualifies (chi <= a_{2n+2} a_{2n+4}); advance while the
  // next term still fits under the bound.
  Index k = 0;
  while (params.term(2 * n + 4 + k) * result.chi <= result.bound) ++k;
  result.xi = k;
  return result;
}

Index xi_literal(const SequenceParams& params, Index n) {
  const Integer lo = params.term(2 * n + 2);
  const Integer hi = params.term(2 * n + 3);
  const Rational rhs = Rational(lo * hi * params.term(2 * n + 4), params.chi());

  auto lhs = [&](Index k) {
    const auto i = static_cast<std::int64_t>(k);
    return Rational(lo * fib(i) + hi * fib(i + 1));
  };

  if (lhs(0) > rhs) throw std::logic_error("xi undefined: inequality fails at 0");
  Index k = 0;
  while (lhs(k + 1) <= rhs) ++k;
  return k;
}

Index xi_closed_form(const SequencePreset& preset, Index n) {
  switch (preset.kind) {
    case PresetKind::fibonacci:
      return 4 * n + 4;
    case PresetKind::lucas:
      return 4 * n + 6;
    case PresetKind::custom:
      break;
  }
  throw UnsupportedPreset("no closed form for xi on " + preset.name());
}

BadInterval bad_interval(const SequenceParams& params, Index n) {
  const Index k = xi(params, n).xi;
  BadInterval interval;
  interval.n = n;
  interval.xi = k;
  interval.left = Rational::unit(params.term(2 * n + 3)) + Rational::unit(params.term(2 * n + 4));
  interval.right = Rational::unit(params.term(2 * n + 2)) + Rational::unit(params.term(2 * n + 3 + k));
  return interval;
}

std::optional<std::string> interval_violation(const SequenceParams& params, const BadInterval& interval) {
  const Index n = interval.n;
  const std::string where = "interval " + std::to_string(n) + ": ";

  const XiResult x = xi(params, n);
  if (x.xi != interval.xi) return where + "xi mismatch";
  if (params.term(2 * n + 3 + x.xi) * x.chi > x.bound) return where + "xi not admissible";
  if (params.term(2 * n + 4 + x.xi) * x.chi <= x.bound) return where + "xi not maximal";

  if (interval.left > interval.right) {
    return where + "left " + format_rational(interval.left) + " exceeds right " + format_rational(interval.right);
  }
  if (!(Rational::unit(params.term(2 * n + 2)) < interval.left)) return where + "left not above 1/a_{2n+2}";
  if (!(interval.right < Rational::unit(params.term(2 * n + 1)))) return where + "right not below 1/a_{2n+1}";
  return std::nullopt;
}

std::vector<BadInterval> interval_table(const SequenceParams& params, std::size_t count) {
  if (count == 0) throw std::invalid_argument("interval count must be at least 1");
  std::vector<BadInterval> table;
  table.reserve(count);
  for (Index n = 0; n < count; ++n) {
    BadInterval interval = bad_interval(params, n);
    if (auto problem = interval_violation(params, interval)) throw std::logic_error(*problem);
    if (!table.empty() && !(interval.right < table.back().left)) {
      throw std::logic_error("interval " + std::to_string(n) + " overlaps interval " + std::to_string(n - 1));
    }
    table.push_back(std::move(interval));
  }
  return table;
}

namespace {

Classification make_classification(const SequenceParams& params, const Rational& theta, GreedyResult greedy,
                                   std::optional<BadInterval> hit) {
  Classification c;
  c.theta = theta;
  c.greedy = std::move(greedy);
  if (hit) {
    c.is_best = false;
    c.competitor = make_two_term(params, 2 * hit->n + 3, 2 * hit->n + 4);
    c.witness_interval = std::move(hit);
  }
  return c;
}

}  // namespace

Classification classify(const SequenceParams& params, const Rational& theta, PairRule rule) {
  GreedyResult greedy = greedy_two_term(params, theta, rule);
  std::optional<BadInterval> hit;
  if (greedy.g1 % 2 == 0) {
    BadInterval candidate = bad_interval(params, (greedy.g1 - 2) / 2);
    if (candidate.contains(theta)) hit = std::move(candidate);
  }
  return make_classification(params, theta, std::move(greedy), std::move(hit));
}

Classification classify_by_scan(const SequenceParams& params, const Rational& theta,
                                const std::vector<BadInterval>& intervals, PairRule rule) {
  GreedyResult greedy = greedy_two_term(params, theta, rule);
  std::optional<BadInterval> hit;
  for (const auto& candidate : intervals) {
    if (candidate.contains(theta)) {
      hit = candidate;
      break;
    }
  }
  return make_classification(params, theta, std::move(greedy), std::move(hit));
}

}  // namespace fibgreedy
