#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "cat/nieon/evaluate.hpp"
#include "cat/severity/risk.hpp"
#include "cat/sim/engine.hpp"

namespace cat::harness {

/// Full harness configuration: documented key-value text format, echoed into
/// every report. Validation enforces the cross-field constraints (the VRU
/// response-time intercept may not exceed the Vehicle intercept).
struct HarnessConfig {
    double sim_step = 0.01;
    sim::SimLimits sim_limits;
    sim::LatencyConfig latency{0.1, 0.08, 0.02};

    nieon::ResponseTimeModel nieon_vehicle{0.6, 0.6, 0.25};
    nieon::ResponseTimeModel nieon_vru{0.4, 0.6, 0.25};
    nieon::ManeuverLimits maneuver_limits;
    bool swerve_includes_braking = true;

    severity::SeverityConfig severity = severity::SeverityConfig::defaults();

    double ztest_alpha = 0.05;
    std::vector<double> ztest_deltas{-0.2, 0.0, 0.2};

    bool jitter_enabled = false;
    std::uint64_t jitter_seed = 1234;

    int parallelism = 1;
    int acceptance_slack = 0;
    std::string database_path;
    std::string policy = "aeb";

    double aeb_ttc_trigger = 2.5;  // s
    double aeb_max_decel = 8.0;    // m/s^2
    double aeb_jerk = 30.0;        // m/s^3

    static HarnessConfig load(const std::filesystem::path& path);
    static HarnessConfig from_text(std::string_view text);

    void validate() const;

    /// Every key with its effective value, sorted; embedded in reports.
    std::map<std::string, std::string> echo() const;
};

/// CAT_HARNESS_THREADS overrides the configured parallelism when set.
int effective_parallelism(const HarnessConfig& config);

}  // namespace cat::harness
