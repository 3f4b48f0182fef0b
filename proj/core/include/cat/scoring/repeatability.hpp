#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cat/scoring/aggregate.hpp"

namespace cat::scoring {

struct RepeatabilityReport {
    struct GroupRow {
        std::string group_id;
        int n_scenarios = 0;
        double p95_collision_pct = 0.0;
        double p95_injury_pct = 0.0;
    };
    std::vector<GroupRow> groups;
    double overall_p95_collision_pct = 0.0;
    double overall_p95_injury_pct = 0.0;
    int runs = 0;
};

/// Runs the evaluation closure once per seed and reports the 95th-percentile
/// absolute percent change of each group's metric counts against the first
/// run, with the group's scenario count as the denominator. With the jitter
/// source disabled the engine is deterministic and every change is zero.
RepeatabilityReport repeatability_analysis(
    const std::function<Aggregate(std::uint64_t seed)>& run, int k,
    std::span<const std::uint64_t> seeds);

/// Nearest-rank empirical percentile (q in [0, 1]) of a sample.
double empirical_percentile(std::vector<double> values, double q);

}  // namespace cat::scoring
