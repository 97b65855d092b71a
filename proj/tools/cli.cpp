#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <sstream>

#include "fibgreedy/greedy.hpp"
#include "fibgreedy/optimality.hpp"
#include "fibgreedy/oracle.hpp"
#include "fibgreedy/sequences.hpp"
#include "fibgreedy/table_io.hpp"
#include "fibgreedy/verify.hpp"
#include "json.hpp"

namespace fibgreedy::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct Limits {
  std::size_t max_n = 300;
  std::size_t max_terms = kDefaultMaxTerms;
  std::size_t grid_denominator = 1000;
};

struct CliConfig {
  std::string sequence_spec = "fibonacci";
  Format output_format = Format::text;
  std::optional<std::string> theta_text;
  Limits limits;
  std::size_t count = 10;
  std::size_t terms = 2;
  std::size_t extra_depth = kDefaultExtraDepth;
  bool distinct_terms = false;

  PairRule rule() const { return distinct_terms ? PairRule::distinct : PairRule::allow_repeat; }
};

// Thrown for argument values that parse but are out of range.
class BadArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const char* rule_name(PairRule rule) { return rule == PairRule::distinct ? "distinct" : "allow_repeat"; }

std::string pair_text(Index m, Index n) { return "(" + std::to_string(m) + ", " + std::to_string(n) + ")"; }

// "F_9" style subscript for presets, empty otherwise.
std::string classical(const SequencePreset& preset, Index n) {
  auto offset = preset.classical_offset();
  if (!offset) return "";
  return std::string(1, *preset.classical_symbol()) + "_" + std::to_string(n + *offset);
}

Rational require_theta(const CliConfig& config) {
  if (!config.theta_text) throw BadArgument("--theta is required");
  Rational theta = parse_rational(*config.theta_text);
  require_unit_interval(theta);
  return theta;
}

void print_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  out << csv_row(header) << "\n";
  for (const auto& row : rows) out << csv_row(row) << "\n";
}

// ---------------------------------------------------------------------------

int cmd_classify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const SequencePreset preset = parse_sequence_spec(config.sequence_spec);
  const SequenceParams& params = preset.params;
  const Rational theta = require_theta(config);

  const Classification c = classify(params, theta, config.rule());
  const OracleReport oracle = oracle_best(params, theta, config.extra_depth, config.rule());
  const GreedyResult& g = c.greedy;
  const TwoTermSum& best = oracle.best;
  const bool disagreement = c.is_best != (g.value == best.value);

  switch (config.output_format) {
    case Format::json: {
      json report = {
          {"sequence", preset.name()},
          {"chi", params.chi().to_string()},
          {"pair_rule", rule_name(config.rule())},
          {"theta", format_rational(theta)},
          {"theta_approx", format_approx(theta)},
          {"g1", g.g1},
          {"g2", g.g2},
          {"greedy_value", format_rational(g.value)},
          {"greedy_value_approx", format_approx(g.value)},
          {"is_best", c.is_best},
          {"bad_interval", c.witness_interval ? interval_to_json(*c.witness_interval) : json(nullptr)},
          {"competitor", c.competitor ? json{{"pair", {c.competitor->m, c.competitor->n}},
                                             {"value", format_rational(c.competitor->value)}}
                                      : json(nullptr)},
          {"best_pair", {best.m, best.n}},
          {"best_value", format_rational(best.value)},
          {"best_value_approx", format_approx(best.value)},
      };
      if (preset.classical_offset()) {
        report["classical"] = {{"g1", classical(preset, g.g1)},
                               {"g2", classical(preset, g.g2)},
                               {"best_pair", {classical(preset, best.m), classical(preset, best.n)}}};
      }
      out << report.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      const auto& w = c.witness_interval;
      print_csv(out,
                {"sequence", "theta", "g1", "g2", "greedy_value", "is_best", "interval_n", "interval_left",
                 "interval_right", "best_m", "best_n", "best_value"},
                {{preset.name(), format_rational(theta), std::to_string(g.g1), std::to_string(g.g2),
                  format_rational(g.value), c.is_best ? "true" : "false", w ? std::to_string(w->n) : "",
                  w ? format_rational(w->left) : "", w ? format_rational(w->right) : "", std::to_string(best.m),
                  std::to_string(best.n), format_rational(best.value)}});
      break;
    }
    case Format::text: {
      out << "sequence      " << preset.name() << " (chi = " << params.chi().to_string() << ")\n";
      out << "theta         " << format_rational(theta) << "  (approx " << format_approx(theta) << ")\n";
      out << "greedy pair   " << pair_text(g.g1, g.g2);
      if (preset.classical_offset()) out << "  [" << classical(preset, g.g1) << ", " << classical(preset, g.g2) << "]";
      out << "\n";
      out << "greedy value  " << format_rational(g.value) << "  (approx " << format_approx(g.value) << ")\n";
      out << "greedy best   " << (c.is_best ? "yes" : "no") << "\n";
      if (c.witness_interval) {
        const auto& w = *c.witness_interval;
        out << "bad interval  n = " << w.n << ", xi = " << w.xi << ": (" << format_rational(w.left) << ", "
            << format_rational(w.right) << "]\n";
      }
      out << "best pair     " << pair_text(best.m, best.n) << " = " << format_rational(best.value) << "  (approx "
          << format_approx(best.value) << ")\n";
      break;
    }
  }

  if (disagreement) {
    err << "error: classifier and exhaustive oracle disagree at theta = " << format_rational(theta)
        << " (classifier is_best = " << (c.is_best ? "true" : "false") << ", greedy " << format_rational(g.value)
        << ", oracle " << pair_text(best.m, best.n) << " = " << format_rational(best.value) << ")\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

int cmd_intervals(const CliConfig& config, std::ostream& out) {
  const SequencePreset preset = parse_sequence_spec(config.sequence_spec);
  if (config.count < 1) throw BadArgument("--count must be at least 1");
  if (config.count > config.limits.max_n + 1) {
    throw BadArgument("--count " + std::to_string(config.count) + " exceeds --max-n + 1 = " +
                      std::to_string(config.limits.max_n + 1));
  }
  const auto table = interval_table(preset.params, config.count);

  switch (config.output_format) {
    case Format::json:
      out << intervals_to_json(preset, table).dump(2) << "\n";
      break;
    case Format::csv:
      out << intervals_to_csv(preset, table);
      break;
    case Format::text: {
      const auto columns = interval_columns(preset);
      const auto rows = interval_rows(preset, table);
      std::vector<std::size_t> width(columns.size());
      for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      auto print_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          out << (i == 0 ? "" : "  ");
          if (i + 1 < row.size()) {
            out << std::left << std::setw(static_cast<int>(width[i])) << row[i];
          } else {
            out << row[i];
          }
        }
        out << "\n";
      };
      print_row(columns);
      for (const auto& row : rows) print_row(row);
      break;
    }
  }
  return kExitOk;
}

int cmd_greedy(const CliConfig& config, std::ostream& out) {
  const SequencePreset preset = parse_sequence_spec(config.sequence_spec);
  const SequenceParams& params = preset.params;
  const Rational theta = require_theta(config);
  if (config.terms < 1) throw BadArgument("--terms must be at least 1");
  const GreedyPrefix prefix = greedy_prefix(params, theta, config.terms, config.limits.max_terms);

  struct Step {
    Index index;
    Integer denominator;
    Rational partial_sum;
  };
  std::vector<Step> steps;
  Rational running;
  for (Index index : prefix.indices) {
    Integer d = params.term(index);
    running = running + Rational::unit(d);
    steps.push_back({index, std::move(d), running});
  }

  switch (config.output_format) {
    case Format::json: {
      json terms = json::array();
      for (std::size_t i = 0; i < steps.size(); ++i) {
        json t = {{"step", i + 1},
                  {"index", steps[i].index},
                  {"denominator", steps[i].denominator.to_string()},
                  {"partial_sum", format_rational(steps[i].partial_sum)},
                  {"partial_sum_approx", format_approx(steps[i].partial_sum)}};
        if (preset.classical_offset()) t["classical_index"] = classical(preset, steps[i].index);
        terms.push_back(std::move(t));
      }
      out << json{{"sequence", preset.name()},
                  {"theta", format_rational(theta)},
                  {"terms", std::move(terms)},
                  {"sum", format_rational(prefix.partial_sum)},
                  {"sum_approx", format_approx(prefix.partial_sum)},
                  {"remainder", format_rational(theta - prefix.partial_sum)}}
                 .dump(2)
          << "\n";
      break;
    }
    case Format::csv: {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < steps.size(); ++i) {
        rows.push_back({std::to_string(i + 1), std::to_string(steps[i].index), classical(preset, steps[i].index),
                        steps[i].denominator.to_string(), format_rational(steps[i].partial_sum)});
      }
      print_csv(out, {"step", "index", "classical_index", "denominator", "partial_sum"}, rows);
      break;
    }
    case Format::text: {
      out << "theta " << format_rational(theta) << " on " << preset.name() << "\n";
      for (std::size_t i = 0; i < steps.size(); ++i) {
        out << "  " << i + 1 << ". a_" << steps[i].index;
        if (preset.classical_offset()) out << " = " << classical(preset, steps[i].index);
        out << " = " << steps[i].denominator.to_string() << "   sum " << format_rational(steps[i].partial_sum)
            << "  (approx " << format_approx(steps[i].partial_sum) << ")\n";
      }
      out << "remainder " << format_rational(theta - prefix.partial_sum) << "\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const SequencePreset preset = parse_sequence_spec(config.sequence_spec);
  if (config.limits.max_n < 1) throw BadArgument("--max-n must be at least 1");
  if (config.limits.grid_denominator < 2) throw BadArgument("--grid must be at least 2");

  VerifyOptions options;
  options.max_n = config.limits.max_n;
  options.grid_denominator = config.limits.grid_denominator;
  options.extra_depth = config.extra_depth;
  options.rule = config.rule();
  const VerifyReport report = run_verification(preset, options);

  switch (config.output_format) {
    case Format::json: {
      json suites = json::array();
      for (const auto& s : report.suites) {
        suites.push_back({{"name", s.name},
                          {"checks", s.checks},
                          {"failures", s.failures},
                          {"first_counterexample", s.first_counterexample ? json(*s.first_counterexample)
                                                                          : json(nullptr)}});
      }
      out << json{{"sequence", preset.name()},
                  {"pair_rule", rule_name(options.rule)},
                  {"max_n", options.max_n},
                  {"grid", options.grid_denominator},
                  {"passed", report.passed()},
                  {"checks", report.total_checks()},
                  {"failures", report.total_failures()},
                  {"suites", std::move(suites)}}
                 .dump(2)
          << "\n";
      break;
    }
    case Format::csv: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& s : report.suites) {
        rows.push_back({s.name, std::to_string(s.checks), std::to_string(s.failures), s.passed() ? "true" : "false",
                        s.first_counterexample.value_or("")});
      }
      print_csv(out, {"suite", "checks", "failures", "passed", "first_counterexample"}, rows);
      break;
    }
    case Format::text: {
      out << "verify " << preset.name() << " (pair rule " << rule_name(options.rule) << ", max-n " << options.max_n
          << ", grid " << options.grid_denominator << ")\n";
      for (const auto& s : report.suites) {
        out << "  " << (s.passed() ? "PASS" : "FAIL") << "  " << std::left << std::setw(24) << s.name << s.checks
            << " checks";
        if (!s.passed()) out << ", " << s.failures << " failed";
        out << "\n";
      }
      out << (report.passed() ? "all passed" : "FAILED") << ": " << report.total_checks() << " checks, "
          << report.total_failures() << " failures\n";
      break;
    }
  }

  if (!report.passed()) {
    for (const auto& s : report.suites) {
      if (s.first_counterexample) {
        err << "first counterexample [" << s.name << "]: " << *s.first_counterexample << "\n";
        break;
      }
    }
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy two-term unit-fraction underapproximation over Fibonacci-type sequences", "fibgreedy"};
  app.require_subcommand(1);

  CliConfig config;
  const std::map<std::string, Format> formats = {{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seq", config.sequence_spec, "fibonacci, lucas or custom:a0,a1")->capture_default_str();
    sub->add_option("--format", config.output_format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("text");
    sub->add_option("--max-n", config.limits.max_n, "Largest n for index-ranged checks")->capture_default_str();
    sub->add_option("--extra-depth", config.extra_depth, "Oracle search depth past g1")->capture_default_str();
    sub->add_flag("--distinct-terms", config.distinct_terms, "Require two distinct indices (m < n) in sums");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Decide whether the greedy pair is the best two-term sum");
  add_common(classify_cmd);
  classify_cmd->add_option("--theta", config.theta_text, "Target in (0,1]: p/q or finite decimal")->required();

  auto* intervals_cmd = app.add_subcommand("intervals", "Table of windows where the greedy pair is not best");
  add_common(intervals_cmd);
  intervals_cmd->add_option("--count", config.count, "Number of intervals")->capture_default_str();

  auto* greedy_cmd = app.add_subcommand("greedy", "First k greedy terms");
  add_common(greedy_cmd);
  greedy_cmd->add_option("--theta", config.theta_text, "Target in (0,1]: p/q or finite decimal")->required();
  greedy_cmd->add_option("--terms", config.terms, "Number of terms")->capture_default_str();
  greedy_cmd->add_option("--max-terms", config.limits.max_terms, "Upper limit for --terms")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run every identity, interval and oracle check");
  add_common(verify_cmd);
  verify_cmd->add_option("--grid", config.limits.grid_denominator, "Check theta = k/grid, k = 1..grid")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(config, out, err);
    if (intervals_cmd->parsed()) return cmd_intervals(config, out);
    if (greedy_cmd->parsed()) return cmd_greedy(config, out);
    return cmd_verify(config, out, err);
  } catch (const std::invalid_argument& e) {  // parse, validation, bad argument
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {  // theta range, division by zero
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {  // limits
    err << "error: " << e.what() << "\n";
  }
  return kExitBadInput;
}

}  // namespace fibgreedy::cli
