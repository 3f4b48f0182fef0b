#include "cat/scoring/track_compare.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "cat/errors.hpp"

namespace cat::scoring {

namespace {

/// Linear interpolation of the arc-length series at time t; nullopt outside
/// the covered range.
std::optional<double> arc_at(const std::vector<std::pair<double, double>>& arc, double t) {
    if (arc.empty() || t < arc.front().first - 1e-9 || t > arc.back().first + 1e-9) {
        return std::nullopt;
    }
    auto hi = std::lower_bound(arc.begin(), arc.end(), t,
                               [](const auto& p, double value) { return p.first < value; });
    if (hi == arc.begin()) return arc.front().second;
    if (hi == arc.end()) return arc.back().second;
    const auto& b = *hi;
    const auto& a = *(hi - 1);
    if (b.first - a.first < 1e-12) return a.second;
    const double f = (t - a.first) / (b.first - a.first);
    return a.second + (b.second - a.second) * f;
}

}  // namespace

TrackComparison track_comparison(std::span<const PositionTrace> sim,
                                 std::span<const PositionTrace> track) {
    std::map<std::string, const PositionTrace*> sim_by_id;
    for (const PositionTrace& s : sim) sim_by_id[s.scenario_id] = &s;

    TrackComparison out;
    int ahead = 0;
    for (const PositionTrace& t : track) {
        const auto it = sim_by_id.find(t.scenario_id);
        if (it == sim_by_id.end()) {
            throw UnmatchedScenario("track scenario '" + t.scenario_id +
                                    "' has no simulated counterpart");
        }
        const PositionTrace& s = *it->second;
        out.matched += 1;
        out.sim_collisions += s.collided ? 1 : 0;
        out.track_collisions += t.collided ? 1 : 0;

        // Positions are progress since stimulus onset (time 0 of the aligned
        // series); rebase both series there so they share a reference.
        const double sim_base =
            arc_at(s.arc, 0.0).value_or(s.arc.empty() ? 0.0 : s.arc.front().second);
        const double track_base =
            arc_at(t.arc, 0.0).value_or(t.arc.empty() ? 0.0 : t.arc.front().second);

        // Even with or ahead at every common sample time counts as ahead.
        bool is_ahead = true;
        for (const auto& [time, track_pos] : t.arc) {
            const auto sim_pos = arc_at(s.arc, time);
            if (!sim_pos) continue;
            if (*sim_pos - sim_base < track_pos - track_base - 1e-9) {
                is_ahead = false;
                break;
            }
        }
        if (is_ahead) {
            ahead += 1;
        } else {
            out.behind_scenarios.push_back(t.scenario_id);
        }
    }

    out.conservative = out.sim_collisions >= out.track_collisions;
    out.ahead_fraction = out.matched > 0 ? static_cast<double>(ahead) / out.matched : 0.0;
    out.trajectories_ahead = out.ahead_fraction > 0.5;
    return out;
}

}  // namespace cat::scoring
