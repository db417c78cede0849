#include "secz/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "secz/errors.hpp"

namespace secz {

using json = nlohmann::ordered_json;

void Report::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns.size())
    throw std::logic_error("report row has " + std::to_string(cells.size()) + " cells for " +
                           std::to_string(columns.size()) + " columns");
  rows.push_back(std::move(cells));
}

const std::string& Report::cell(std::size_t row, const std::string& column) const {
  const auto it = std::find(columns.begin(), columns.end(), column);
  if (it == columns.end()) throw std::out_of_range("no report column " + column);
  return rows.at(row).at(static_cast<std::size_t>(it - columns.begin()));
}

std::string to_json(const Report& report, bool include_timing) {
  json j;
  j["schema"] = kReportSchema;
  j["version"] = kVersion;
  j["command"] = report.command;
  json inputs = json::object();
  for (const auto& [key, value] : report.inputs) inputs[key] = value;
  j["inputs"] = inputs;
  j["columns"] = report.columns;
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r = json::object();
    for (std::size_t c = 0; c < report.columns.size(); ++c) r[report.columns[c]] = row[c];
    rows.push_back(std::move(r));
  }
  j["rows"] = rows;
  j["notes"] = report.notes;
  if (include_timing) j["timing"] = {{"elapsed_seconds", report.elapsed_seconds}};
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("report is not valid JSON: ") + e.what());
  }
  if (!j.contains("schema") || j["schema"] != kReportSchema) throw Error("unsupported report schema");
  Report r;
  r.command = j.at("command").get<std::string>();
  for (const auto& [key, value] : j.at("inputs").items()) r.inputs.emplace_back(key, value.get<std::string>());
  r.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& row : j.at("rows")) {
    std::vector<std::string> cells;
    for (const auto& column : r.columns) cells.push_back(row.at(column).get<std::string>());
    r.rows.push_back(std::move(cells));
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("timing")) r.elapsed_seconds = j["timing"].at("elapsed_seconds").get<double>();
  return r;
}

namespace {

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

std::string to_csv(const Report& report) {
  std::ostringstream out;
  for (std::size_t c = 0; c < report.columns.size(); ++c) out << (c ? "," : "") << csv_cell(report.columns[c]);
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
    out << '\n';
  }
  return out.str();
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << report.command << '\n';
  for (const auto& [key, value] : report.inputs) out << "  " << key << ": " << value << '\n';
  std::size_t width = 0;
  for (const auto& column : report.columns) width = std::max(width, column.size());
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    out << '\n';
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      out << "  " << report.columns[c] << std::string(width - report.columns[c].size(), ' ') << "  "
          << report.rows[r][c] << '\n';
    }
  }
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  return out.str();
}

}  // namespace secz
