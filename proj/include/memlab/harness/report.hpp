#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "memlab/harness/config.hpp"

namespace memlab {

/// A CSV table with a header row. Cells are preformatted strings.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
  std::string to_csv() const;
};

/// %.17g, with inf/nan spelled "inf", "-inf", "nan".
std::string fmt(Scalar x);
std::string fmt(std::size_t x);

struct Series {
  std::string label;
  std::vector<Scalar> x;
  std::vector<Scalar> y;
};

struct Chart {
  std::string name;
  std::string title;
  std::string xlabel;
  std::string ylabel;
  bool logx = false;
  bool logy = false;
  std::vector<Series> series;
};

/// Polyline chart as standalone SVG. Non-finite points, and nonpositive
/// points on log axes, are dropped.
std::string render_svg(const Chart& chart, const std::string& comment = {});

struct Report {
  ExperimentConfig config;
  nlohmann::json summary = nlohmann::json::object();
  std::vector<Table> tables;
  std::vector<Chart> charts;
};

/// Writes <name>.csv and <name>.meta.json per table and <name>.svg per chart.
/// Every file carries the config hash: a leading "# config_hash=" line in
/// CSV, an XML comment in SVG, a field in JSON. Returns the written paths.
std::vector<std::string> emit_report(const Report& report, const std::string& out_dir);

struct VerifyResult {
  std::size_t files_checked = 0;
  std::vector<std::string> problems;
  bool ok() const noexcept { return problems.empty() && files_checked > 0; }
};

/// Recomputes the hash of the config embedded in each *.meta.json and checks
/// that every CSV and SVG in the directory carries it.
VerifyResult verify_report(const std::string& out_dir);

extern const char* const kToolVersion;

}  // namespace memlab
