#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cat::scoring {

/// Arc-length position history of one ego run, time-aligned to the stimulus
/// onset: (t, s) pairs with t increasing.
struct PositionTrace {
    std::string scenario_id;
    bool collided = false;
    std::vector<std::pair<double, double>> arc;  // (time since onset, arc length)
};

struct TrackComparison {
    bool conservative = false;      // criterion (a): sim collisions >= track collisions
    double ahead_fraction = 0.0;    // criterion (b) input
    bool trajectories_ahead = false;  // ahead_fraction > 0.5
    int matched = 0;
    int sim_collisions = 0;
    int track_collisions = 0;
    std::vector<std::string> behind_scenarios;
};

/// Matches sim and track records by scenario id (UnmatchedScenario when a
/// track record has no sim counterpart). A scenario counts as "ahead" when
/// the simulated arc-length position is even with or ahead of the track
/// position at every common sample time.
TrackComparison track_comparison(std::span<const PositionTrace> sim,
                                 std::span<const PositionTrace> track);

}  // namespace cat::scoring
