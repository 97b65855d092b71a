#pragma once

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

#include "fibgreedy/optimality.hpp"
#include "fibgreedy/sequences.hpp"

namespace fibgreedy {

// RFC-4180 field quoting: quote when the field holds a comma, quote, CR or
// LF; embedded quotes are doubled.
std::string csv_escape(std::string_view field);
std::string csv_row(const std::vector<std::string>& fields);

// Column names for an interval table. Presets with a closed form for xi get
// two extra columns: xi_closed_form and xi_matches.
std::vector<std::string> interval_columns(const SequencePreset& preset);

// One row per interval, values as strings in interval_columns order.
std::vector<std::vector<std::string>> interval_rows(const SequencePreset& preset,
                                                   const std::vector<BadInterval>& table);

// {n, xi, left, right, left_approx, right_approx}
nlohmann::json interval_to_json(const BadInterval& interval);

// [{n, xi, left, right, left_approx, right_approx[, xi_closed_form, xi_matches]}]
nlohmann::json intervals_to_json(const SequencePreset& preset, const std::vector<BadInterval>& table);

// Header row plus one line per interval.
std::string intervals_to_csv(const SequencePreset& preset, const std::vector<BadInterval>& table);

}  // namespace fibgreedy
