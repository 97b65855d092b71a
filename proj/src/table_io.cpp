#include "fibgreedy/table_io.hpp"

namespace fibgreedy {

namespace {

bool has_closed_form(const SequencePreset& preset) { return preset.kind != PresetKind::custom; }

}  // namespace

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_escape(fields[i]);
  }
  return line;
}

std::vector<std::string> interval_columns(const SequencePreset& preset) {
  std::vector<std::string> columns = {"n", "xi", "left", "right", "left_approx", "right_approx"};
  if (has_closed_form(preset)) {
    columns.emplace_back("xi_closed_form");
    columns.emplace_back("xi_matches");
  }
  return columns;
}

std::vector<std::vector<std::string>> interval_rows(const SequencePreset& preset,
                                                   const std::vector<BadInterval>& table) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(table.size());
  for (const auto& interval : table) {
    std::vector<std::string> row = {std::to_string(interval.n),       std::to_string(interval.xi),
                                    format_rational(interval.left),   format_rational(interval.right),
                                    format_approx(interval.left),     format_approx(interval.right)};
    if (has_closed_form(preset)) {
      const Index closed = xi_closed_form(preset, interval.n);
      row.push_back(std::to_string(closed));
      row.emplace_back(closed == interval.xi ? "true" : "false");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json interval_to_json(const BadInterval& interval) {
  return {
      {"n", interval.n},
      {"xi", interval.xi},
      {"left", format_rational(interval.left)},
      {"right", format_rational(interval.right)},
      {"left_approx", format_approx(interval.left)},
      {"right_approx", format_approx(interval.right)},
  };
}

nlohmann::json intervals_to_json(const SequencePreset& preset, const std::vector<BadInterval>& table) {
  auto out = nlohmann::json::array();
  for (const auto& interval : table) {
    nlohmann::json row = interval_to_json(interval);
    if (has_closed_form(preset)) {
      const Index closed = xi_closed_form(preset, interval.n);
      row["xi_closed_form"] = closed;
      row["xi_matches"] = closed == interval.xi;
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string intervals_to_csv(const SequencePreset& preset, const std::vector<BadInterval>& table) {
  std::string out = csv_row(interval_columns(preset)) + "\n";
  for (const auto& row : interval_rows(preset, table)) out += csv_row(row) + "\n";
  return out;
}

}  // namespace fibgreedy
