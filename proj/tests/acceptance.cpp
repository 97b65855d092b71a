// Acceptance gate. Prints one PASS/FAIL line per criterion; the exit status is
// nonzero if any selected criterion fails.
//
//   acceptance                 run every criterion
//   acceptance --criterion 3   run one criterion

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "fibgreedy/optimality.hpp"
#include "fibgreedy/oracle.hpp"
#include "fibgreedy/verify.hpp"

using namespace fibgreedy;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<SequencePreset> five_sequences() {
  return {fibonacci_preset(), lucas_preset(), parse_sequence_spec("custom:2,2"), parse_sequence_spec("custom:2,3"),
          parse_sequence_spec("custom:4,5")};
}

std::string pair_str(Index m, Index n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

Outcome closed_form_xi(const SequencePreset& preset, Index offset) {
  Outcome o;
  std::size_t wrong = 0;
  for (Index n = 0; n <= 300; ++n) {
    const Index got = xi(preset.params, n).xi;
    if (got != 4 * n + offset) {
      if (wrong++ == 0) o.detail = "n=" + std::to_string(n) + " xi=" + std::to_string(got);
    }
  }
  o.pass = wrong == 0;
  if (o.pass) o.detail = preset.name() + ": xi(n) = 4n+" + std::to_string(offset) + " for n in [0,300]";
  return o;
}

// Sweep over theta = k/1000 on the five sequences with the default pair rule.
struct SweepStats {
  std::size_t checks = 0;
  std::size_t disagreements = 0;
  std::string first_disagreement;
  std::size_t truncation_exceptions = 0;
  std::size_t shape_exceptions = 0;
  std::string first_exception;
};

SweepStats sweep(PairRule rule) {
  SweepStats s;
  for (const auto& preset : five_sequences()) {
    const auto& p = preset.params;
    for (long long k = 1; k <= 1000; ++k) {
      const Rational theta(k, 1000);
      const Classification c = classify(p, theta, rule);
      const OracleReport o = oracle_best(p, theta, kDefaultExtraDepth, rule);
      const Index g1 = c.greedy.g1;
      ++s.checks;

      if (c.is_best != (c.greedy.value == o.best.value)) {
        if (s.disagreements++ == 0) {
          s.first_disagreement = preset.name() + " theta=" + format_rational(theta) + ": is_best=" +
                                 (c.is_best ? "true" : "false") + ", greedy " + pair_str(g1, c.greedy.g2) + " = " +
                                 format_rational(c.greedy.value) + ", oracle " + pair_str(o.best.m, o.best.n) +
                                 " = " + format_rational(o.best.value);
        }
      }

      const bool truncation_ok = o.best.m <= g1 + 1;
      const bool shape_ok = c.is_best || (o.best.m == g1 + 1 && o.best.n == g1 + 2);
      if (!truncation_ok) ++s.truncation_exceptions;
      if (!shape_ok) ++s.shape_exceptions;
      if ((!truncation_ok || !shape_ok) && s.first_exception.empty()) {
        s.first_exception = preset.name() + " theta=" + format_rational(theta) + ": g1=" + std::to_string(g1) +
                            ", winner " + pair_str(o.best.m, o.best.n);
      }
    }
  }
  return s;
}

const SweepStats& default_sweep() {
  static const SweepStats stats = sweep(PairRule::allow_repeat);
  return stats;
}

Outcome criterion1() { return closed_form_xi(fibonacci_preset(), 4); }

Outcome criterion2() { return closed_form_xi(lucas_preset(), 6); }

Outcome criterion3() {
  const SweepStats& s = default_sweep();
  Outcome o;
  o.pass = s.disagreements == 0;
  std::ostringstream d;
  d << s.checks << " checks, " << s.disagreements << " disagreements";
  if (!o.pass) d << "; first: " << s.first_disagreement;
  o.detail = d.str();

  // Informational: the same sweep when a pair must use two distinct indices.
  const SweepStats distinct = sweep(PairRule::distinct);
  std::cout << "  info: with --distinct-terms: " << distinct.checks << " checks, " << distinct.disagreements
            << " disagreements\n";
  return o;
}

Outcome criterion4() {
  const auto f = bad_interval(fibonacci_preset().params, 0);
  const auto l = bad_interval(lucas_preset().params, 0);
  Outcome o;
  o.pass = f.left == Rational(8, 15) && f.right == Rational(23, 42) && l.left == Rational(29, 198) &&
           l.right == Rational(206, 1393);
  o.detail = "fibonacci (" + format_rational(f.left) + ", " + format_rational(f.right) + "], lucas (" +
             format_rational(l.left) + ", " + format_rational(l.right) + "]";
  return o;
}

Outcome criterion5() {
  const auto& p = fibonacci_preset().params;
  const Classification c = classify(p, Rational(27, 50));
  const OracleReport o = oracle_best(p, Rational(27, 50));
  const Classification edge = classify(p, Rational(23, 42));
  Outcome out;
  out.pass = c.greedy.g1 == 2 && c.greedy.g2 == 8 && c.greedy.value == Rational(9, 17) && !c.is_best &&
             o.best.m == 3 && o.best.n == 4 && o.best.value == Rational(8, 15) && !edge.is_best;
  out.detail = "27/50: greedy " + pair_str(c.greedy.g1, c.greedy.g2) + " = " + format_rational(c.greedy.value) +
               ", is_best=" + (c.is_best ? "true" : "false") + ", oracle " + pair_str(o.best.m, o.best.n) + " = " +
               format_rational(o.best.value) + "; 23/42: is_best=" + (edge.is_best ? "true" : "false");
  return out;
}

Outcome criterion6() {
  std::vector<SuiteResult> suites{verify_fib_addition(30)};
  for (const auto& preset : five_sequences()) {
    suites.push_back(verify_shift_identity(preset.params, 50));
    suites.push_back(verify_cassini_like(preset.params, 300));
    suites.push_back(verify_growth(preset.params, 300));
    suites.push_back(verify_positivity(preset.params, 300));
    suites.push_back(verify_recurrence_formula(preset.params, 500));
  }
  Outcome o;
  std::size_t checks = 0, failures = 0;
  for (const auto& s : suites) {
    checks += s.checks;
    failures += s.failures;
    if (!s.passed() && o.pass) {
      o.pass = false;
      o.detail = s.name + ": " + s.first_counterexample.value_or("") + "; ";
    }
  }
  o.detail += std::to_string(checks) + " checks, " + std::to_string(failures) + " failures";
  return o;
}

Outcome criterion7() {
  const SweepStats& s = default_sweep();
  Outcome o;
  o.pass = s.truncation_exceptions == 0 && s.shape_exceptions == 0;
  o.detail = std::to_string(s.checks) + " thetas, " + std::to_string(s.truncation_exceptions) +
             " winners past g1+1, " + std::to_string(s.shape_exceptions) + " non-best cases without (g1+1,g1+2)";
  if (!o.pass) o.detail += "; first: " + s.first_exception;
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-7)")->check(CLI::Range(1, 7));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "closed-form xi, fibonacci", criterion1},
      {2, "closed-form xi, lucas", criterion2},
      {3, "classifier vs oracle on k/1000, five sequences", criterion3},
      {4, "first-interval endpoints", criterion4},
      {5, "worked classification", criterion5},
      {6, "identity suites, five sequences", criterion6},
      {7, "oracle truncation and competitor shape", criterion7},
  };

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_pass = all_pass && o.pass;
    std::printf("%s criterion %d: %s [%.2fs] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
