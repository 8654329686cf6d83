#include "divsum/cli/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#ifndef DIVSUM_VERSION
#define DIVSUM_VERSION "0.0.0"
#endif

namespace divsum::cli {

void ExperimentReport::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error(experiment + ": row has " + std::to_string(row.size()) + " cells, expected " +
                           std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::size_t ExperimentReport::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range(experiment + ": no column '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

bool ExperimentReport::has_warnings() const {
  const auto it = std::find(columns.begin(), columns.end(), "status");
  if (it == columns.end()) return false;
  const auto idx = static_cast<std::size_t>(it - columns.begin());
  return std::any_of(rows.begin(), rows.end(), [&](const auto& r) { return r[idx] != "ok"; });
}

std::string version_string() { return std::string("divsum ") + DIVSUM_VERSION; }

std::string sci(const Real& x, int significant) {
  if (!x.is_finite()) return "nan";
  if (x.is_zero()) return Real(x.precision()).to_string(significant);
  return x.to_string(significant);
}

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "# experiment: " << report.experiment << '\n';
  out << "# version: " << version_string() << '\n';
  out << "# digits: " << report.digits << '\n';
  out << "# guard_digits: " << report.guard_digits << '\n';
  for (const auto& [key, value] : report.parameters) out << "# " << key << ": " << value << '\n';
  if (report.wall_time_s) out << "# wall_time_s: " << *report.wall_time_s << '\n';
  for (const auto& note : report.notes) out << "# note: " << note << '\n';
  for (std::size_t i = 0; i < report.columns.size(); ++i) out << (i ? "," : "") << report.columns[i];
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
  return out.str();
}

std::string to_json(const ExperimentReport& report) {
  nlohmann::ordered_json doc;
  doc["experiment"] = report.experiment;
  doc["version"] = version_string();
  auto& params = doc["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.parameters) params[key] = value;
  auto& prov = doc["provenance"];
  prov["digits"] = report.digits;
  prov["guard_digits"] = report.guard_digits;
  if (report.wall_time_s) prov["wall_time_s"] = *report.wall_time_s;
  doc["notes"] = report.notes;
  doc["columns"] = report.columns;
  auto& records = doc["records"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json rec;
    for (std::size_t i = 0; i < row.size(); ++i) rec[report.columns[i]] = row[i];
    records.push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

}  // namespace divsum::cli
