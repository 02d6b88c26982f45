#pragma once

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace anselberg {

constexpr const char* version_string = "0.1.0";

/// Raised for anything that prevents a report from being produced: bad
/// flags, bad config file, violated hypotheses, empty suite selection.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReportCase {
  std::string name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  double lhs = 0, rhs = 0, abs_err = 0, rel_err = 0;
  std::optional<double> std_error;
  bool pass = false;
  /// human-readable statement of the tolerance that decides pass
  std::string tolerance;
  /// set when the case failed for a reason other than tolerance
  std::string reason;
};

struct ReportMeta {
  std::uint64_t seed = 0;
  int workers = 1;
  double runtime_seconds = 0;
  std::string precision_mode = "double";
  std::string generator_id;
  std::string version = version_string;
};

struct Report {
  std::string suite;
  std::vector<ReportCase> cases; // sorted by name
  ReportMeta meta;
  std::map<std::string, std::string> config;
  bool all_pass() const;
};

/// Flat key=value configuration. Keys mirror the long flag names.
using ConfigMap = std::map<std::string, std::string>;

const std::vector<std::string>& config_keys();
ConfigMap default_config();
/// '#' starts a comment; blank lines are skipped. Unknown keys throw ConfigError.
ConfigMap read_config_file(const std::string& path);
ConfigMap parse_config_text(const std::string& text);
/// later maps win
ConfigMap merge_config(ConfigMap base, const ConfigMap& over);

enum class Precision { double_, extended };
enum class Format { json, csv };
Format parse_format(const std::string& s);

struct SuiteConfig {
  std::string suite; // symbolic | qseries | integrals | all
  std::vector<int> k;
  double alpha = 1.5;
  std::vector<double> beta;
  double gamma = 0.25;
  std::string variant = "finite";
  std::vector<int> mu;
  double q = 0.5;
  int trunc = 40;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  int workers = 1;
  Precision precision = Precision::double_;
  Format format = Format::json;
  std::string out;
  int max_weight = 4;
  int max_n = 3;
};

/// Parses and checks an effective config. Throws ConfigError.
SuiteConfig parse_suite_config(const ConfigMap& cfg);

Report run_suite(const SuiteConfig& cfg, const ConfigMap& effective);

std::string emit_report(const Report& r, Format f);
/// Writes to path, or stdout when path is empty. Throws std::runtime_error on I/O failure.
void write_report(const Report& r, Format f, const std::string& path);
Report parse_report_json(const std::string& text);

} // namespace anselberg
