#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cat/scenario/types.hpp"
#include "cat/sim/contact.hpp"
#include "cat/sim/policy.hpp"

namespace cat::nieon {
struct ControlSchedule;
}

namespace cat::sim {

/// Per-module delays; each must be a non-negative multiple of the step.
struct LatencyConfig {
    double perception_delay = 0.0;  // s
    double planning_delay = 0.0;    // s
    double actuation_delay = 0.0;   // s

    double observation_delay() const { return perception_delay + planning_delay; }
    void validate(double step) const;
};

/// Seeded per-step perturbation of the observation delay by +/- one step.
/// Models residual platform non-determinism; off by default.
struct JitterConfig {
    bool enabled = false;
    std::uint64_t seed = 0;
};

struct SimLimits {
    double max_brake = 9.0;      // m/s^2
    double max_accel = 4.0;      // m/s^2
    double max_curvature = 0.3;  // 1/m
};

struct SimTrace {
    std::vector<VehicleState> ego;                 // one state per step boundary
    std::vector<std::vector<VehicleState>> actors;  // [step][actor]
    std::optional<Contact> first_contact;
    std::uint64_t seed = 0;
    double step = 0.0;
    bool valid = true;
    std::string fault;

    double time_at(std::size_t index) const { return static_cast<double>(index) * step; }
};

/// Ground-truth actor state at time t, interpolated between trajectory
/// samples (held constant outside the sampled range).
VehicleState interpolate_actor(const scenario::ActorTrajectory& trajectory, double t);
VehicleState interpolate_samples(const std::vector<scenario::TrajectorySample>& samples, double t);

/// Runs one scenario under a policy with latency injection. Actors replay
/// their trajectories; the ego integrates a kinematic single-track update
/// from the policy commands. Halts at the first contact. Identical inputs
/// produce bit-identical traces.
SimTrace run_scenario(const scenario::ConcreteScenario& scenario, EgoPolicy& policy,
                      const LatencyConfig& latency, double step, std::uint64_t seed,
                      const SimLimits& limits = {}, const JitterConfig& jitter = {});

/// Reference-driver runner: the ego replays the scenario's nominal motion
/// until switch_time, then integrates the control schedule. No latency (the
/// response-time model already encapsulates the driver's delay).
SimTrace run_scheduled(const scenario::ConcreteScenario& scenario, double switch_time,
                       const nieon::ControlSchedule& schedule, double step,
                       const SimLimits& limits = {});

/// One row per step: t, ego pose and speed, then per-actor x/y.
void write_trace_csv(const SimTrace& trace, const scenario::ConcreteScenario& scenario,
                     std::ostream& out);

}  // namespace cat::sim
