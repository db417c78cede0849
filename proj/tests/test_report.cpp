#include "doctest.h"
#include "secz/report.hpp"

#include <sstream>

#include "json.hpp"
#include "secz/commands.hpp"
#include "secz/errors.hpp"
#include "support.hpp"

using secz::Real;

namespace {

std::vector<std::string> csv_cells(const std::string& csv) {
  std::vector<std::string> cells;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
  }
  return cells;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("rows must match the columns") {
    secz::Report r;
    r.columns = {"a", "b"};
    CHECK_THROWS_AS(r.add_row({"1"}), std::logic_error);
    r.add_row({"1", "2"});
    CHECK(r.cell(0, "b") == "2");
    CHECK_THROWS_AS(r.cell(0, "c"), std::out_of_range);
  }

  TEST_CASE("JSON round trip is lossless") {
    const auto& table = test::desk_table();
    auto report = secz::estimate_report(table, {0, 1, 2}, secz::MethodChoice::both, secz::default_cutoff(table), {});
    report.elapsed_seconds = 1.25;
    const std::string json = secz::to_json(report);
    const auto parsed = nlohmann::json::parse(json);
    CHECK(parsed["schema"] == secz::kReportSchema);
    const auto back = secz::report_from_json(json);
    CHECK(back.command == report.command);
    CHECK(back.inputs == report.inputs);
    CHECK(back.columns == report.columns);
    CHECK(back.rows == report.rows);
    CHECK(back.notes == report.notes);
    CHECK(back.elapsed_seconds == 1.25);
    CHECK(secz::to_json(back) == json);
    CHECK_THROWS_AS(secz::report_from_json("{\"schema\": \"other\"}"), secz::Error);
    CHECK_THROWS_AS(secz::report_from_json("not json"), secz::Error);
  }

  TEST_CASE("numbers are printed at full working precision") {
    const auto& table = test::desk_table();
    const auto report = secz::estimate_report(table, {0}, secz::MethodChoice::bpt, secz::default_cutoff(table), {});
    const std::string& value = report.cell(0, "estimate");
    const auto digits = std::count_if(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; });
    CHECK(digits >= secz::decimal_digits(secz::working_precision()));
  }

  TEST_CASE("JSON and CSV carry identical numeric strings") {
    const auto& table = test::desk_table();
    const auto report = secz::estimate_report(table, {0, 1}, secz::MethodChoice::both, secz::default_cutoff(table), {});
    const auto cells = csv_cells(secz::to_csv(report));
    std::vector<std::string> from_json;
    const auto parsed = nlohmann::ordered_json::parse(secz::to_json(report));
    for (const auto& row : parsed["rows"])
      for (const auto& [key, value] : row.items()) from_json.push_back(value.get<std::string>());
    CHECK(cells == from_json);
  }

  TEST_CASE("report bodies are identical across worker counts") {
    const auto& table = test::desk_table();
    const Real t = secz::default_cutoff(table);
    auto body = [&](unsigned workers) {
      auto r = secz::estimate_report(table, {0, 1, 2}, secz::MethodChoice::both, t, {workers});
      r.inputs.erase(std::remove_if(r.inputs.begin(), r.inputs.end(), [](const auto& kv) { return kv.first == "threads"; }),
                     r.inputs.end());
      return secz::to_json(r, false);
    };
    const std::string one = body(1);
    CHECK(body(2) == one);
    CHECK(body(8) == one);
  }

  TEST_CASE("text rendering lists every column") {
    secz::Report r;
    r.command = "demo";
    r.columns = {"n", "estimate"};
    r.add_row({"0", "0.25"});
    const std::string text = secz::to_text(r);
    CHECK(text.find("estimate") != std::string::npos);
    CHECK(text.find("0.25") != std::string::npos);
  }
}
