// Copyright 2026 The hbtdicke Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hbtdicke/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hbtdicke/functional.hpp"
#include "hbtdicke/verify.hpp"

namespace hbtdicke::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view format_name(Format f) { return f == Format::kCsv ? "csv" : "json"; }

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["n_atoms"] = c.n_emitters;
  j["order"] = c.order_m;
  j["kd"] = c.kd;
  j["theta1"] = c.theta1_rad;
  j["theta2_min"] = c.theta2_min;
  j["theta2_max"] = c.theta2_max;
  j["theta2_steps"] = c.theta2_steps;
  j["method"] = to_string(c.method);
  j["compare"] = c.compare ? ordered_json(to_string(*c.compare)) : ordered_json(nullptr);
  j["format"] = format_name(c.format);
  j["seed"] = c.seed;
  j["path_budget"] = c.path_budget;
  j["verify"] = c.verify;
  j["verify_samples"] = c.verify_samples;
  return j;
}

std::string config_line(const RunConfig& c) {
  std::ostringstream os;
  os << "n_atoms=" << c.n_emitters << " order=" << c.order_m << " kd=" << num(c.kd)
     << " theta1=" << num(c.theta1_rad) << " theta2_min=" << num(c.theta2_min)
     << " theta2_max=" << num(c.theta2_max) << " theta2_steps=" << c.theta2_steps
     << " method=" << to_string(c.method) << " compare=" << (c.compare ? to_string(*c.compare) : "none")
     << " format=" << format_name(c.format) << " seed=" << c.seed << " path_budget=" << num(c.path_budget)
     << " verify=" << (c.verify ? "true" : "false") << " verify_samples=" << c.verify_samples;
  return os.str();
}

void check_method(const RunConfig& c, Method method) {
  switch (method) {
    case Method::kExact:
      if (c.n_emitters > kMaxExactEmitters) {
        throw ConfigError("method exact: N=" + std::to_string(c.n_emitters) +
                          " exceeds the exact-engine cap of " + std::to_string(kMaxExactEmitters));
      }
      break;
    case Method::kPathSum:
      if (path_count(c.n_emitters, c.order_m) > c.path_budget) {
        throw ConfigError("method pathsum: C(N,m)*m! = " + num(path_count(c.n_emitters, c.order_m)) +
                          " exceeds the path budget " + num(c.path_budget));
      }
      break;
    case Method::kFunctional:
      if (max_term_count(c.n_emitters, 2) > kMaxFunctionalTerms) {
        throw ConfigError("method functional: expansion for N=" + std::to_string(c.n_emitters) +
                          " exceeds the term budget");
      }
      break;
    case Method::kClosed: break;
  }
}

// Writes `text` to the configured path, or to `out` when no path is set.
int emit(const RunConfig& config, const std::string& text, std::ostream& out, std::ostream& err) {
  if (!config.out_path) {
    out << text;
    return kOk;
  }
  std::ofstream file(*config.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open output path '" << *config.out_path << "'\n";
    return kIoError;
  }
  file << text;
  file.flush();
  if (!file) {
    err << "error: failed writing '" << *config.out_path << "'\n";
    return kIoError;
  }
  return kOk;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.n_emitters < 1) throw ConfigError("--n-atoms must be >= 1");
  if (!(c.kd > 0.0) || !std::isfinite(c.kd)) throw ConfigError("--kd must be positive and finite");
  if (!std::isfinite(c.theta1_rad) || !std::isfinite(c.theta2_min) || !std::isfinite(c.theta2_max)) {
    throw ConfigError("detector angles must be finite");
  }
  if (!(c.path_budget > 0.0)) throw ConfigError("path budget must be positive");
  if (c.verify) {
    if (c.n_emitters < 2) throw ConfigError("--verify needs --n-atoms >= 2");
    if (c.n_emitters > kMaxExactEmitters) {
      throw ConfigError("--verify: N=" + std::to_string(c.n_emitters) + " exceeds the exact-engine cap of " +
                        std::to_string(kMaxExactEmitters));
    }
    if (c.verify_samples < 1) throw ConfigError("--samples must be >= 1");
    return;
  }
  if (c.order_m < 1 || c.order_m > c.n_emitters) {
    throw ConfigError("--order must lie in [1, N=" + std::to_string(c.n_emitters) + "]");
  }
  if (c.theta2_steps < 2) throw ConfigError("--theta2-steps must be >= 2");
  if (!(c.theta2_min < c.theta2_max)) throw ConfigError("--theta2-min must be below --theta2-max");
  check_method(c, c.method);
  if (c.compare) check_method(c, *c.compare);
}

std::vector<double> theta2_grid(const RunConfig& c) {
  std::vector<double> grid(static_cast<std::size_t>(c.theta2_steps));
  const double step = (c.theta2_max - c.theta2_min) / (c.theta2_steps - 1);
  for (int i = 0; i < c.theta2_steps; ++i) grid[i] = c.theta2_min + step * i;
  grid.back() = c.theta2_max;
  return grid;
}

int run_scan(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  const EmitterGeometry geometry(config.n_emitters, config.kd);
  const std::vector<double> grid = theta2_grid(config);
  ScanOptions options;
  options.path_budget = config.path_budget;

  CorrelationCurve curve;
  std::optional<double> deviation;
  try {
    curve = scan_curve(geometry, config.order_m, config.theta1_rad, grid, config.method, options);
    if (config.compare) {
      const CorrelationCurve other =
          scan_curve(geometry, config.order_m, config.theta1_rad, grid, *config.compare, options);
      deviation = max_relative_deviation(curve, other);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  const CurveSummary summary = summarize(curve);

  std::string text;
  if (config.format == Format::kCsv) {
    std::ostringstream os;
    os << "# tool=" << kToolName << " version=" << kToolVersion << "\n";
    os << "# " << config_line(config) << "\n";
    os << "# visibility=" << num(summary.visibility) << " peak_value=" << num(summary.peak_value)
       << " first_zero_phase=" << num(summary.first_zero_phase) << " angular_mean=" << num(summary.angular_mean)
       << "\n";
    if (deviation) {
      os << "# compare_method=" << to_string(*config.compare) << " max_relative_deviation=" << num(*deviation)
         << "\n";
    }
    os << "theta2_rad,phase_x,value,method\n";
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
      os << num(curve.theta2_grid[i]) << ',' << num(curve.phase_x[i]) << ',' << num(curve.values[i]) << ','
         << to_string(curve.method) << "\n";
    }
    text = os.str();
  } else {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["config"] = config_json(config);
    ordered_json s;
    s["visibility"] = summary.visibility;
    s["peak_value"] = summary.peak_value;
    s["first_zero_phase"] = std::isnan(summary.first_zero_phase) ? ordered_json(nullptr)
                                                                 : ordered_json(summary.first_zero_phase);
    s["angular_mean"] = summary.angular_mean;
    j["summary"] = s;
    if (deviation) {
      j["comparison"] = {{"method", to_string(*config.compare)}, {"max_relative_deviation", *deviation}};
    }
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
      rows.push_back({{"theta2_rad", curve.theta2_grid[i]},
                      {"phase_x", curve.phase_x[i]},
                      {"value", curve.values[i]},
                      {"method", to_string(curve.method)}});
    }
    j["curve"] = std::move(rows);
    text = j.dump(2) + "\n";
  }
  return emit(config, text, out, err);
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  VerifyOptions options;
  options.n_min = 2;
  options.n_max = config.n_emitters;
  options.samples = config.verify_samples;
  options.seed = config.seed;
  options.kd = config.kd;
  options.inject_fault = config.inject_fault;

  VerifyReport report;
  try {
    report = run_verification(options);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  std::string text;
  if (config.format == Format::kJson) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["config"] = config_json(config);
    ordered_json suites = ordered_json::array();
    for (const SuiteResult& s : report.suites) {
      suites.push_back({{"name", s.name},
                        {"passed", s.passed()},
                        {"max_deviation", s.max_deviation},
                        {"tolerance", s.tolerance},
                        {"checks", s.checks},
                        {"worst_case", s.worst_case}});
    }
    j["suites"] = std::move(suites);
    j["passed"] = report.passed();
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "# tool=" << kToolName << " version=" << kToolVersion << "\n";
    os << "# " << config_line(config) << "\n";
    for (const SuiteResult& s : report.suites) {
      os << (s.passed() ? "PASS " : "FAIL ") << s.name << " max_deviation=" << num(s.max_deviation)
         << " tolerance=" << num(s.tolerance) << " checks=" << s.checks;
      if (!s.passed()) os << " worst: " << s.worst_case;
      os << "\n";
    }
    os << "verify: " << (report.passed() ? "PASS" : "FAIL") << "\n";
    text = os.str();
  }
  const int written = emit(config, text, out, err);
  if (written != kOk) return written;
  if (!report.passed()) {
    for (const SuiteResult& s : report.suites) {
      if (!s.passed()) err << "tolerance breach in " << s.name << " at " << s.worst_case << "\n";
    }
    return kCheckFailed;
  }
  return kOk;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Higher-order photon correlations of fully excited emitter chains"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  auto* n_opt = app.add_option("--n-atoms", config.n_emitters, "Number of emitters N");
  app.add_option("--order", config.order_m, "Correlation order m");
  app.add_option("--kd", config.kd, "Spacing times wavenumber (dimensionless)");
  app.add_option("--theta1", config.theta1_rad, "Angle of the (m-1) coincident detectors [rad]");
  app.add_option("--theta2-min", config.theta2_min, "Start of the theta2 scan [rad]");
  app.add_option("--theta2-max", config.theta2_max, "End of the theta2 scan [rad]");
  app.add_option("--theta2-steps", config.theta2_steps, "Number of theta2 grid points");
  const std::vector<std::string> method_names{"exact", "pathsum", "closed", "functional"};
  std::string method_name{to_string(config.method)};
  app.add_option("--method", method_name, "exact | pathsum | closed | functional")
      ->check(CLI::IsMember(method_names));
  std::string compare_name;
  auto* compare_opt = app.add_option("--compare", compare_name, "Second method to evaluate on the same grid")
                          ->check(CLI::IsMember(method_names));
  std::string format_name_arg = "csv";
  app.add_option("--format", format_name_arg, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  std::string out_path;
  auto* out_opt = app.add_option("--out", out_path, "Output file (default: stdout)");
  app.add_option("--seed", config.seed, "Seed for randomized verification angles");
  app.add_option("--path-budget", config.path_budget, "Ceiling on C(N,m)*m! for the path sum");
  app.add_flag("--verify", config.verify, "Run the invariant suites instead of a scan");
  app.add_option("--samples", config.verify_samples, "Random detector tuples per (N, m) in --verify");
  app.add_flag("--inject-fault", config.inject_fault, "Harness self-test: flip a detector phase sign")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }
  config.method = *parse_method(method_name);
  if (compare_opt->count() > 0) config.compare = parse_method(compare_name);
  config.format = format_name_arg == "json" ? Format::kJson : Format::kCsv;
  if (out_opt->count() > 0) config.out_path = out_path;
  if (config.verify && n_opt->count() == 0) config.n_emitters = 8;

  return config.verify ? run_verify(config, out, err) : run_scan(config, out, err);
}

}  // namespace hbtdicke::cli
