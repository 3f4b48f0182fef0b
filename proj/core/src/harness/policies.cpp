#include "cat/harness/policies.hpp"

#include <algorithm>
#include <cmath>

#include "cat/errors.hpp"

namespace cat::harness {

namespace {

using sim::ControlCommand;
using sim::ObservedWorld;

/// Pure-pursuit curvature toward a lookahead point on the nominal route.
double route_curvature(const ObservedWorld& w) {
    if (w.route.size() < 2) return 0.0;
    const geom::Vec2 pos{w.ego.x, w.ego.y};
    const double s = geom::polyline_closest_arc(w.route, pos);
    const double lookahead = std::max(3.0, 0.8 * w.ego.speed);
    const geom::Vec2 target = geom::polyline_point_at(w.route, s + lookahead);
    const double desired = std::atan2(target.y - pos.y, target.x - pos.x);
    const double alpha = geom::wrap_angle(desired - w.ego.heading);
    return 2.0 * std::sin(alpha) / lookahead;
}

class NoReactionPolicy final : public sim::EgoPolicy {
public:
    ControlCommand step(const ObservedWorld& observed) override {
        return {0.0, route_curvature(observed)};
    }
    std::string_view name() const override { return "no_reaction"; }
};

class AebPolicy final : public sim::EgoPolicy {
public:
    AebPolicy(double ttc_trigger, double max_decel, double jerk)
        : ttc_trigger_(ttc_trigger), max_decel_(max_decel), jerk_(jerk) {}

    void reset() override {
        latched_ = false;
        last_t_ = -1.0;
        last_accel_ = 0.0;
    }

    ControlCommand step(const ObservedWorld& observed) override {
        const double dt = last_t_ >= 0.0 ? observed.t - last_t_ : 0.01;
        last_t_ = observed.t;

        if (!latched_ && predicted_ttc(observed) <= ttc_trigger_) latched_ = true;

        ControlCommand cmd;
        cmd.curvature = route_curvature(observed);
        if (latched_) {
            last_accel_ = std::max(-max_decel_, last_accel_ - jerk_ * std::max(dt, 0.0));
            cmd.longitudinal_accel = last_accel_;
        } else {
            last_accel_ = 0.0;
            cmd.longitudinal_accel = 0.0;
        }
        return cmd;
    }

    std::string_view name() const override { return "aeb"; }

private:
    /// First time at which the constant-velocity forward roll of the ego
    /// (along its route) overlaps any constant-velocity actor extrapolation.
    double predicted_ttc(const ObservedWorld& w) const {
        constexpr double horizon = 6.0;
        constexpr double coarse = 0.1;
        if (w.route.size() < 2) return horizon;
        const geom::Vec2 pos{w.ego.x, w.ego.y};
        const double s0 = geom::polyline_closest_arc(w.route, pos);
        for (double tau = 0.0; tau <= horizon; tau += coarse) {
            const double s = s0 + w.ego.speed * tau;
            const geom::Vec2 p = geom::polyline_point_at(w.route, s);
            const double heading = geom::polyline_heading_at(w.route, s);
            const geom::OrientedRect ego_rect{p, heading, w.ego_footprint.length,
                                              w.ego_footprint.width};
            for (const sim::ObservedActor& a : w.actors) {
                const geom::Vec2 ap{a.state.x + std::cos(a.state.heading) * a.state.speed * tau,
                                    a.state.y + std::sin(a.state.heading) * a.state.speed * tau};
                const geom::OrientedRect actor_rect{ap, a.state.heading, a.footprint.length,
                                                    a.footprint.width};
                if (geom::rects_overlap(ego_rect, actor_rect)) return tau;
            }
        }
        return horizon;
    }

    double ttc_trigger_;
    double max_decel_;
    double jerk_;
    bool latched_ = false;
    double last_t_ = -1.0;
    double last_accel_ = 0.0;
};

/// Marker policy; the runner swaps in the reference-driver evaluation.
class NieonAsPolicy final : public sim::EgoPolicy {
public:
    ControlCommand step(const ObservedWorld&) override { return {}; }
    std::string_view name() const override { return "nieon_as_policy"; }
};

}  // namespace

std::unique_ptr<sim::EgoPolicy> make_policy(std::string_view name, const HarnessConfig& config) {
    if (name == "no_reaction") return std::make_unique<NoReactionPolicy>();
    if (name == "aeb") {
        return std::make_unique<AebPolicy>(config.aeb_ttc_trigger, config.aeb_max_decel,
                                           config.aeb_jerk);
    }
    if (name == "nieon_as_policy") return std::make_unique<NieonAsPolicy>();
    throw ConfigError("unknown policy '" + std::string(name) + "'");
}

bool is_reference_policy(std::string_view name) { return name == "nieon_as_policy"; }

std::vector<std::string> builtin_policy_names() {
    return {"no_reaction", "aeb", "nieon_as_policy"};
}

}  // namespace cat::harness
