// run.hpp — config-driven task execution producing machine-readable reports
//
// Config: a JSON object with a "model" block and exactly one task block
// ("diagnose" | "dynamics" | "thermal" | "validate").  Reports are
// nlohmann::ordered_json with fixed field order for byte-stable output.

#pragma once

#include <json.hpp>  // vendored nlohmann/json

#include <string>

#include "udw/diagnostics.hpp"
#include "udw/dynamics.hpp"
#include "udw/validate.hpp"

namespace udw::run {

using json = nlohmann::ordered_json;

struct ModelConfig {
    ModeSpace mode_space{3, Dispersion::massless()};
    SpatialProfile profile = SpatialProfile::gaussian(1.0);
    double lambda = 1.0;
    double delta = 0.0;
    double omega_gap = 0.0;  // carried, must be zero (gapless exact results)
};

ModelConfig parse_model(const json& j);
CouplingFunction coupling_of(const ModelConfig& m);
SpatialProfile parse_profile(const json& j);
TestFunction parse_test_function(const json& j, const ModeSpace& ms);
std::vector<double> parse_grid(const json& j);

json verdict_json(const diag::IntegralVerdict& v);
json report_json(const diag::DiagnosticsReport& r);

// Task runners; throw ConfigError for malformed configs, module errors
// propagate.  Each returns the full report as JSON; CSV rendering is a view
// of the same data.
json run_diagnose(const json& config);
json run_dynamics(const json& config);
json run_thermal(const json& config);
json run_validate(const json& config);

// Dispatch on the single task block present.
json run_task(const json& config);
std::string task_name(const json& config);

// Byte-stable CSV rendering of a series {"columns": [...], "rows": [[...]]}.
std::string series_csv(const json& series);

// Shortest round-trip decimal for doubles.
std::string format_double(double v);

// Write-to-temp plus atomic rename; no partial outputs on errors.
void write_atomic(const std::string& path, const std::string& content);

} // namespace udw::run
