#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cat/lang/layouts.hpp"
#include "cat/scenario/safety_groups.hpp"
#include "cat/scenario/types.hpp"

namespace cat::lang {

struct SamplingPlan {
    enum class Mode { Grid, LatinHypercube };
    Mode mode = Mode::Grid;
    std::uint64_t seed = 0;  // ignored in grid mode
    int samples = 0;         // latin hypercube draw count
    std::map<std::string, double> pinned;  // per-parameter fixed-value overrides
};

struct InstantiateOptions {
    double approach_time = 6.0;   // s until the ego reaches the conflict point
    double tail_time = 4.0;       // s of scenario after the nominal conflict
    double sample_dt = 0.1;       // trajectory sample spacing
    double default_ramp_up = 0.5; // s, when the source gave no stimulus.ramp_up
    std::string test_request = "tr_unspecified";
};

/// Grid points for one range: n = ceil((max-min)/step + 1) values at
/// min + k*step, clamped to max. Throws EmptyRange on malformed ranges.
std::vector<double> grid_values(const scenario::ParameterRange& range);

/// Expands a logical scenario into concrete scenarios. Grid mode yields the
/// full cartesian product of the per-parameter grids; latin hypercube mode
/// draws `samples` seeded, reproducible valuations. Trajectories come from
/// maneuver templates over the layout geometry, with actor motion triggered
/// at the configured time-to-conflict and the stimulus annotation derived
/// from the trigger.
std::vector<scenario::ConcreteScenario> instantiate_concrete(
    const scenario::LogicalScenario& logical, const SamplingPlan& plan,
    const LayoutLibrary& layouts, const scenario::SafetyGroupRegistry& registry,
    const InstantiateOptions& options = {});

scenario::FootprintSpec footprint_of(scenario::ActorKind kind);
scenario::FootprintSpec ego_footprint();

}  // namespace cat::lang
