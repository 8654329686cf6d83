#pragma once

#include "divsum/numerics/complex.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace divsum::cli {

/// One experiment's output: fixed columns, rows of pre-formatted cells and
/// provenance. Cells hold numbers in scientific notation, so the CSV and JSON
/// forms carry identical text.
struct ExperimentReport {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  int digits = 0;
  int guard_digits = 0;
  std::optional<double> wall_time_s;

  /// Appends a row; throws std::logic_error if its width is wrong.
  void add_row(std::vector<std::string> row);
  /// Index of a column; throws std::out_of_range.
  std::size_t column(const std::string& name) const;
  bool has_warnings() const;
};

/// "divsum <version>".
std::string version_string();

/// Scientific notation with `significant` digits.
std::string sci(const Real& x, int significant);

/// Header comments, the column line and one line per row.
std::string to_csv(const ExperimentReport& report);
/// {"experiment", "version", "parameters", "provenance", "notes", "columns", "records"}.
std::string to_json(const ExperimentReport& report);

}  // namespace divsum::cli
