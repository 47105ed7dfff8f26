#include "dlab/report.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "dlab/errors.hpp"

namespace dlab::harness {

namespace {

using nlohmann::ordered_json;

// Shortest round-trip decimal form; non-finite values become "null" like in JSON.
std::string number_text(double x) { return ordered_json(x).dump(); }

double number_from(const ordered_json& j, const char* what) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!j.is_number()) throw DomainError(std::string("report JSON: ") + what + " is not a number");
  return j.get<double>();
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

bool metric_passes(double value, double tolerance) { return value <= tolerance; }

bool ExperimentReport::check(std::string name, double value, double tolerance) {
  const bool pass = metric_passes(value, tolerance);
  metrics.push_back({std::move(name), value, tolerance, pass});
  return pass;
}

void ExperimentReport::info(std::string name, double value) {
  metrics.push_back({std::move(name), value, std::nullopt, std::nullopt});
}

const Metric* ExperimentReport::find(std::string_view name) const {
  for (const auto& m : metrics) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

bool ExperimentReport::all_pass() const {
  for (const auto& m : metrics) {
    if (m.pass.has_value() && !*m.pass) return false;
  }
  return true;
}

bool ExperimentReport::flags_consistent() const {
  for (const auto& m : metrics) {
    if (m.tolerance.has_value() != m.pass.has_value()) return false;
    if (m.tolerance && *m.pass != metric_passes(m.value, *m.tolerance)) return false;
  }
  return true;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "plotdata") return Format::kPlotdata;
  throw DomainError("unknown format '" + std::string(name) + "' (json, csv or plotdata)");
}

std::string to_json(const ExperimentReport& report, bool with_walltime) {
  ordered_json j;
  j["experiment"] = report.experiment;
  j["version"] = report.version;
  j["params"] = report.params;
  j["seed"] = report.seed;
  ordered_json metrics = ordered_json::array();
  for (const auto& m : report.metrics) {
    ordered_json entry;
    entry["name"] = m.name;
    entry["value"] = m.value;
    entry["tolerance"] = m.tolerance ? ordered_json(*m.tolerance) : ordered_json(nullptr);
    entry["pass"] = m.pass ? ordered_json(*m.pass) : ordered_json(nullptr);
    metrics.push_back(std::move(entry));
  }
  j["metrics"] = std::move(metrics);
  if (with_walltime) j["walltime_ms"] = report.walltime_ms;
  return j.dump(2) + "\n";
}

ExperimentReport report_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw DomainError(std::string("report JSON: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("report JSON: top level is not an object");
  ExperimentReport report;
  try {
    report.experiment = j.at("experiment").get<std::string>();
    report.version = j.at("version").get<int>();
    report.params = j.at("params");
    report.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& entry : j.at("metrics")) {
      Metric m;
      m.name = entry.at("name").get<std::string>();
      m.value = number_from(entry.at("value"), "metric value");
      if (!entry.at("tolerance").is_null()) m.tolerance = number_from(entry.at("tolerance"), "tolerance");
      if (!entry.at("pass").is_null()) m.pass = entry.at("pass").get<bool>();
      report.metrics.push_back(std::move(m));
    }
    if (j.contains("walltime_ms")) report.walltime_ms = number_from(j.at("walltime_ms"), "walltime_ms");
  } catch (const ordered_json::exception& e) {
    throw DomainError(std::string("report JSON: ") + e.what());
  }
  return report;
}

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream os;
  os << "experiment,name,value,tolerance,pass\n";
  for (const auto& m : report.metrics) {
    os << csv_field(report.experiment) << ',' << csv_field(m.name) << ',' << number_text(m.value) << ','
       << (m.tolerance ? number_text(*m.tolerance) : "") << ',' << (m.pass ? (*m.pass ? "true" : "false") : "")
       << '\n';
  }
  return os.str();
}

std::string to_plotdata(const ExperimentReport& report) {
  std::ostringstream os;
  os << "# " << report.experiment << "\n";
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<std::string, double>>> series;
  for (const auto& m : report.metrics) {
    const auto at = m.name.rfind('@');
    if (at == std::string::npos) {
      os << "# " << m.name << " " << number_text(m.value) << "\n";
      continue;
    }
    const std::string key = m.name.substr(0, at);
    if (!series.count(key)) order.push_back(key);
    series[key].emplace_back(m.name.substr(at + 1), m.value);
  }
  for (const auto& key : order) {
    os << "\n\n# " << key << "\n";
    for (const auto& [x, y] : series[key]) os << x << " " << number_text(y) << "\n";
  }
  return os.str();
}

std::string render(const ExperimentReport& report, Format format) {
  switch (format) {
    case Format::kJson: return to_json(report);
    case Format::kCsv: return to_csv(report);
    case Format::kPlotdata: return to_plotdata(report);
  }
  return {};
}

void emit(const ExperimentReport& report, Format format, std::ostream& os) { os << render(report, format); }

void emit(const ExperimentReport& report, Format format, const std::filesystem::path& path) {
  if (path == "-") {
    emit(report, format, std::cout);
    return;
  }
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write report to " + path.string());
  emit(report, format, os);
}

}  // namespace dlab::harness
