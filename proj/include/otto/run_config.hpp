// run_config.hpp: JSON run configuration for the batch runner.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "otto/cycle_analysis.hpp"

namespace otto {

// Evenly spaced values min + i (max - min) / (n - 1); n = 1 yields {min}.
struct Range {
    double min = 0.0;
    double max = 0.0;
    int n = 1;

    std::vector<double> values() const;
    bool operator==(const Range&) const = default;
};

// A stroke time is either one value or a range.
struct TimeAxis {
    std::optional<double> value;
    std::optional<Range> range;

    bool is_scalar() const { return value.has_value(); }
    std::vector<double> values() const;
    double max() const;
    bool operator==(const TimeAxis&) const = default;
};

struct RunConfig {
    double omega_h = 0.0;
    std::optional<double> omega_c;
    double T_h = 0.0;
    std::optional<double> T_c;
    double lambda_h = 0.01;
    double lambda_c = 0.01;
    double cutoff_h = 0.4;
    double cutoff_c = 0.4;
    std::optional<TimeAxis> t_h;
    std::optional<TimeAxis> t_c;
    std::optional<Range> ratio_T;      // T_c / T_h, phase runs only
    std::optional<Range> ratio_omega;  // omega_c / omega_h, phase runs only
    std::optional<double> grid_step;
    std::optional<std::string> output;
    Dynamics dynamics = Dynamics::Tcl2;
    int workers = 1;

    bool operator==(const RunConfig&) const = default;
};

// Parses one JSON document. Unknown keys, wrong types and out-of-range values throw
// Error{Config} naming the offending field.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& config);

enum class Command { Kernels, Stroke, Cycle, Sweep, Phase };

// Command-specific requirements: scalar times for cycle / stroke / kernels, time ranges for
// sweep, ratio ranges in (0, 1) for phase, omega_h > omega_c > 0 and T_h > T_c > 0.
void validate_for(const RunConfig& config, Command command);

// Physical parameters of the config; ratio overrides replace T_c and omega_c.
CycleParameters cycle_parameters(const RunConfig& config, std::optional<double> ratio_T = std::nullopt,
                                 std::optional<double> ratio_omega = std::nullopt);

Dynamics parse_dynamics(const std::string& name);

}  // namespace otto
