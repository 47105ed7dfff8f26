#pragma once

// Experiment reports and their JSON / CSV / plot-data encodings.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dlab::harness {

inline constexpr int kReportVersion = 1;

/// An observed value. Checked metrics pass when value <= tolerance (NaN never passes);
/// informational metrics carry neither tolerance nor pass flag.
struct Metric {
  std::string name;
  double value = 0.0;
  std::optional<double> tolerance;
  std::optional<bool> pass;

  friend bool operator==(const Metric&, const Metric&) = default;
};

bool metric_passes(double value, double tolerance);

struct ExperimentReport {
  std::string experiment;
  int version = kReportVersion;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::uint64_t seed = 0;
  std::vector<Metric> metrics;
  double walltime_ms = 0.0;

  /// Adds a checked metric and returns its pass flag.
  bool check(std::string name, double value, double tolerance);
  void info(std::string name, double value);

  const Metric* find(std::string_view name) const;
  /// True when every checked metric passed.
  bool all_pass() const;
  /// Pass flags agree with metric_passes(value, tolerance) for every metric.
  bool flags_consistent() const;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

enum class Format { kJson, kCsv, kPlotdata };

Format parse_format(std::string_view name);

/// Keys in order: experiment, version, params, seed, metrics, walltime_ms.
/// Without walltime the last key is omitted, which is the reproducible part.
std::string to_json(const ExperimentReport& report, bool with_walltime = true);
ExperimentReport report_from_json(std::string_view text);

/// Header "experiment,name,value,tolerance,pass"; empty fields for informational metrics.
std::string to_csv(const ExperimentReport& report);

/// Metrics named "series@x" become two-column blocks "x value", one per series, separated by
/// blank lines and headed by "# series". Other metrics are listed as comments.
std::string to_plotdata(const ExperimentReport& report);

std::string render(const ExperimentReport& report, Format format);
void emit(const ExperimentReport& report, Format format, std::ostream& os);
/// Writes to path, or to stdout for "-".
void emit(const ExperimentReport& report, Format format, const std::filesystem::path& path);

}  // namespace dlab::harness
