#include "fibgreedy/verify.hpp"

#include <algorithm>
#include <numeric>

#include "fibgreedy/optimality.hpp"

namespace fibgreedy {

void SuiteResult::record(bool ok, const std::string& counterexample_if_failed) {
  ++checks;
  if (ok) return;
  ++failures;
  if (!first_counterexample) first_counterexample = counterexample_if_failed;
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::size_t VerifyReport::total_checks() const {
  return std::accumulate(suites.begin(), suites.end(), std::size_t{0},
                         [](std::size_t acc, const SuiteResult& s) { return acc + s.checks; });
}

std::size_t VerifyReport::total_failures() const {
  return std::accumulate(suites.begin(), suites.end(), std::size_t{0},
                         [](std::size_t acc, const SuiteResult& s) { return acc + s.failures; });
}

namespace {

std::string describe(const SequenceParams& params) {
  return "(a0,a1)=(" + params.a0().to_string() + "," + params.a1().to_string() + ")";
}

std::string at(const SequenceParams& params, const std::string& what) { return describe(params) + " " + what; }

Rational inv(const SequenceParams& params, Index n) { return Rational::unit(params.term(n)); }

std::string pair_str(Index m, Index n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

}  // namespace

SuiteResult verify_fib_addition(std::int64_t range) {
  SuiteResult r{"fib_addition"};
  for (std::int64_t n = -range; n <= range; ++n) {
    for (std::int64_t m = -range; m <= range; ++m) {
      r.record(check_fib_addition(n, m), "n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
  return r;
}

SuiteResult verify_recurrence_formula(const SequenceParams& params, Index max_n) {
  SuiteResult r{"recurrence_vs_formula"};
  for (Index n = 0; n <= max_n; ++n) {
    Integer by_recurrence = seq_term(params, n);
    Integer by_formula = seq_term_by_formula(params, n);
    r.record(by_recurrence == by_formula, at(params, "n=" + std::to_string(n) + ": recurrence " +
                                                         by_recurrence.to_string() + " vs formula " +
                                                         by_formula.to_string()));
  }
  return r;
}

SuiteResult verify_growth(const SequenceParams& params, Index max_n) {
  SuiteResult r{"strict_growth"};
  for (Index n = 1; n <= max_n; ++n) {
    r.record(params.term(n + 1) > params.term(n), at(params, "a_{n+1} <= a_n at n=" + std::to_string(n)));
    r.record(params.term(n + 2) > params.term(n) * Integer(2),
             at(params, "a_{n+2} <= 2 a_n at n=" + std::to_string(n)));
  }
  return r;
}

SuiteResult verify_shift_identity(const SequenceParams& params, Index max_nm) {
  SuiteResult r{"shift_identity"};
  for (Index n = 0; n <= max_nm; ++n) {
    for (Index m = 0; m <= max_nm; ++m) {
      r.record(check_shift_identity(params, n, m), at(params, "n=" + std::to_string(n) + " m=" + std::to_string(m)));
    }
  }
  return r;
}

SuiteResult verify_cassini_like(const SequenceParams& params, Index max_n) {
  SuiteResult r{"cassini_like"};
  for (Index n = 0; n <= max_n; ++n) r.record(check_cassini_like(params, n), at(params, "n=" + std::to_string(n)));
  return r;
}

SuiteResult verify_positivity(const SequenceParams& params, Index max_n) {
  SuiteResult r{"positivity"};
  const Rational zero;
  for (Index n = 0; n <= max_n; ++n) {
    const std::string where = "n=" + std::to_string(n);
    r.record(inv(params, 2 * n + 1) - inv(params, 2 * n + 2) - inv(params, 2 * n + 3) > zero,
             at(params, where + ": 1/a_{2n+1} - 1/a_{2n+2} - 1/a_{2n+3} <= 0"));
    r.record(inv(params, 2 * n + 3) + inv(params, 2 * n + 4) - inv(params, 2 * n + 2) > zero,
             at(params, where + ": 1/a_{2n+3} + 1/a_{2n+4} - 1/a_{2n+2} <= 0"));
    r.record(inv(params, 2 * n + 2) - inv(params, 2 * n + 3) - inv(params, 2 * n + 5) > zero,
             at(params, where + ": 1/a_{2n+2} - 1/a_{2n+3} - 1/a_{2n+5} <= 0"));
  }
  return r;
}

SuiteResult verify_xi(const SequenceParams& params, Index max_n) {
  SuiteResult r{"xi_and_intervals"};
  std::optional<BadInterval> previous;
  for (Index n = 0; n <= max_n + 1; ++n) {
    const std::string where = "n=" + std::to_string(n) + ": ";
    const XiResult x = xi(params, n);
    const BadInterval interval = bad_interval(params, n);

    // Disjointness needs interval n+1, hence the extra iteration.
    if (previous) {
      r.record(interval.right < previous->left,
               at(params, where + "interval overlaps or touches interval " + std::to_string(n - 1)));
    }
    previous = interval;
    if (n > max_n) break;

    r.record(params.chi() <= params.term(2 * n + 2) * params.term(2 * n + 4),
             at(params, where + "xi undefined: chi > a_{2n+2} a_{2n+4}"));

    const Index literal = xi_literal(params, n);
    r.record(literal == x.xi,
             at(params, where + "integer xi " + std::to_string(x.xi) + " vs literal " + std::to_string(literal)));

    // Reciprocal form: largest k with 1/a_{2n+3+k} >= chi / bound.
    const Rational threshold(x.chi, x.bound);
    r.record(inv(params, 2 * n + 3 + x.xi) >= threshold, at(params, where + "1/a_{2n+3+xi} < chi/bound"));
    r.record(inv(params, 2 * n + 4 + x.xi) < threshold, at(params, where + "1/a_{2n+4+xi} >= chi/bound"));

    const Rational gap = inv(params, 2 * n + 3) - inv(params, 2 * n + 2) + inv(params, 2 * n + 4);
    r.record(gap == threshold, at(params, where + "endpoint identity: gap " + format_rational(gap) + " != " +
                                               format_rational(threshold)));

    auto problem = interval_violation(params, interval);
    r.record(!problem, at(params, problem.value_or("")));
  }
  return r;
}

SuiteResult verify_closed_form(const SequencePreset& preset, Index max_n) {
  SuiteResult r{"xi_closed_form"};
  if (preset.kind == PresetKind::custom) {
    r.record(false, preset.name() + " has no closed form");
    return r;
  }
  for (Index n = 0; n <= max_n; ++n) {
    const Index computed = xi(preset.params, n).xi;
    const Index expected = xi_closed_form(preset, n);
    r.record(computed == expected, preset.name() + " n=" + std::to_string(n) + ": xi " + std::to_string(computed) +
                                       " != " + std::to_string(expected));
  }
  return r;
}

GridSuites verify_grid(const SequenceParams& params, std::size_t denominator, PairRule rule,
                       std::size_t extra_depth) {
  GridSuites g{{"classifier_vs_oracle"}, {"oracle_dominance"}, {"oracle_truncation"}, {"competitor_shape"},
               {"classifier_vs_scan"}};

  // Interval n lies below 1/a_{2n+1}, so intervals with a_{2n+1} > denominator
  // cannot contain any grid point.
  Index count = 1;
  while (params.term(2 * count + 1) <= Integer(static_cast<long long>(denominator))) ++count;
  const std::vector<BadInterval> table = interval_table(params, count);

  const Integer den(static_cast<long long>(denominator));
  for (std::size_t k = 1; k <= denominator; ++k) {
    const Rational theta(Integer(static_cast<long long>(k)), den);
    const std::string where = "theta=" + format_rational(theta) + ": ";

    const Classification c = classify(params, theta, rule);
    const OracleReport oracle = oracle_best(params, theta, extra_depth, rule);
    const GreedyResult& greedy = c.greedy;
    const TwoTermSum& best = oracle.best;

    const bool greedy_is_optimal = greedy.value == best.value;
    g.equivalence.record(c.is_best == greedy_is_optimal,
                         at(params, where + "classify is_best=" + (c.is_best ? "true" : "false") + ", greedy " +
                                        pair_str(greedy.g1, greedy.g2) + " = " + format_rational(greedy.value) +
                                        ", oracle " + pair_str(best.m, best.n) + " = " +
                                        format_rational(best.value)));

    g.dominance.record(best.value >= greedy.value && best.value < theta,
                       at(params, where + "oracle " + format_rational(best.value) + " vs greedy " +
                                      format_rational(greedy.value)));

    g.truncation.record(oracle.truncation_sound() && oracle.first_feasible == greedy.g1,
                        at(params, where + "winner m=" + std::to_string(best.m) + " with g1=" +
                                       std::to_string(greedy.g1) + ", first feasible " +
                                       std::to_string(oracle.first_feasible)));

    if (!c.is_best) {
      g.competitor.record(best.m == greedy.g1 + 1 && best.n == greedy.g1 + 2 && c.competitor == best,
                          at(params, where + "winner " + pair_str(best.m, best.n) + ", expected " +
                                         pair_str(greedy.g1 + 1, greedy.g1 + 2)));
    }

    const Classification scanned = classify_by_scan(params, theta, table, rule);
    g.scan_agreement.record(scanned.is_best == c.is_best, at(params, where + "single-interval test disagrees with scan"));
  }
  return g;
}

VerifyReport run_verification(const SequencePreset& preset, const VerifyOptions& options) {
  const SequenceParams& params = preset.params;
  VerifyReport report;
  report.suites.push_back(verify_fib_addition(options.fib_range));
  report.suites.push_back(verify_recurrence_formula(params, options.recurrence_max));
  report.suites.push_back(verify_growth(params, options.recurrence_max));
  report.suites.push_back(verify_shift_identity(params, options.shift_max));
  report.suites.push_back(verify_cassini_like(params, options.max_n));
  report.suites.push_back(verify_positivity(params, options.max_n));
  report.suites.push_back(verify_xi(params, options.max_n));
  if (preset.kind != PresetKind::custom) report.suites.push_back(verify_closed_form(preset, options.max_n));

  GridSuites grid = verify_grid(params, options.grid_denominator, options.rule, options.extra_depth);
  report.suites.push_back(std::move(grid.equivalence));
  report.suites.push_back(std::move(grid.dominance));
  report.suites.push_back(std::move(grid.truncation));
  report.suites.push_back(std::move(grid.competitor));
  report.suites.push_back(std::move(grid.scan_agreement));
  return report;
}

}  // namespace fibgreedy
