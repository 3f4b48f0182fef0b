#include "cat/sim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "cat/errors.hpp"
#include "cat/nieon/maneuver.hpp"

namespace cat::sim {

namespace {

constexpr double kStationarySpeed = 0.1;  // m/s

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long steps_of(double delay, double step, const char* what) {
    const double ratio = delay / step;
    const long n = std::lround(ratio);
    if (n < 0 || std::abs(ratio - static_cast<double>(n)) > 1e-6) {
        throw ConfigError(std::string(what) + " delay must be a non-negative multiple of the step");
    }
    return n;
}

VehicleState integrate(const VehicleState& s, const ControlCommand& cmd, double step,
                       const SimLimits& limits) {
    const double accel = std::clamp(cmd.longitudinal_accel, -limits.max_brake, limits.max_accel);
    const double curvature = std::clamp(cmd.curvature, -limits.max_curvature, limits.max_curvature);
    VehicleState n;
    n.x = s.x + std::cos(s.heading) * s.speed * step;
    n.y = s.y + std::sin(s.heading) * s.speed * step;
    n.heading = geom::wrap_angle(s.heading + curvature * s.speed * step);
    n.speed = std::max(0.0, s.speed + accel * step);
    n.accel = accel;
    n.curvature = curvature;
    return n;
}

std::optional<Contact> contact_at(const VehicleState& ego,
                                  const scenario::ConcreteScenario& scenario,
                                  const std::vector<VehicleState>& actor_states, double t) {
    for (std::size_t i = 0; i < actor_states.size(); ++i) {
        const auto point = detect_contact(ego, scenario.ego_footprint, actor_states[i],
                                          scenario.actor_footprints[i]);
        if (!point) continue;
        Contact c;
        c.time = t;
        c.point = *point;
        // The overlap centroid can land epsilon outside the body due to the
        // closed overlap convention; clamp it onto the footprint box.
        geom::Vec2 local = world_to_body(*point, ego);
        const scenario::FootprintSpec& fp = scenario.ego_footprint;
        local.x = std::clamp(local.x, -fp.length * 0.5, fp.length * 0.5);
        local.y = std::clamp(local.y, -fp.width * 0.5, fp.width * 0.5);
        c.ego_zone = classify_impact_zone(local, fp);
        const geom::Vec2 v_ego{std::cos(ego.heading) * ego.speed, std::sin(ego.heading) * ego.speed};
        const VehicleState& a = actor_states[i];
        const geom::Vec2 v_actor{std::cos(a.heading) * a.speed, std::sin(a.heading) * a.speed};
        c.relative_speed_at_impact = geom::norm(v_ego - v_actor);
        c.ego_stationary = ego.speed < kStationarySpeed;
        c.partner_index = static_cast<int>(i);
        return c;
    }
    return std::nullopt;
}

std::vector<VehicleState> actors_at(const scenario::ConcreteScenario& scenario, double t) {
    std::vector<VehicleState> out;
    out.reserve(scenario.actor_trajectories.size());
    for (const scenario::ActorTrajectory& traj : scenario.actor_trajectories) {
        out.push_back(interpolate_actor(traj, t));
    }
    return out;
}

}  // namespace

void LatencyConfig::validate(double step) const {
    steps_of(perception_delay, step, "perception");
    steps_of(planning_delay, step, "planning");
    steps_of(actuation_delay, step, "actuation");
}

VehicleState interpolate_samples(const std::vector<scenario::TrajectorySample>& samples, double t) {
    VehicleState s;
    if (samples.empty()) return s;
    const auto to_state = [](const scenario::TrajectorySample& a) {
        VehicleState v;
        v.x = a.x;
        v.y = a.y;
        v.heading = a.heading;
        v.speed = a.speed;
        return v;
    };
    if (t <= samples.front().t) return to_state(samples.front());
    if (t >= samples.back().t) {
        VehicleState v = to_state(samples.back());
        if (v.speed > 0.0) {  // extrapolate constant velocity past the last sample
            const double dt = t - samples.back().t;
            v.x += std::cos(v.heading) * v.speed * dt;
            v.y += std::sin(v.heading) * v.speed * dt;
        }
        return v;
    }
    auto hi = std::upper_bound(samples.begin(), samples.end(), t,
                               [](double value, const scenario::TrajectorySample& s) {
                                   return value < s.t;
                               });
    const scenario::TrajectorySample& b = *hi;
    const scenario::TrajectorySample& a = *(hi - 1);
    const double f = (t - a.t) / (b.t - a.t);
    VehicleState v;
    v.x = a.x + (b.x - a.x) * f;
    v.y = a.y + (b.y - a.y) * f;
    v.heading = geom::wrap_angle(a.heading + geom::wrap_angle(b.heading - a.heading) * f);
    v.speed = a.speed + (b.speed - a.speed) * f;
    v.accel = (b.speed - a.speed) / (b.t - a.t);
    if (v.speed > 0.0) {
        v.curvature = geom::wrap_angle(b.heading - a.heading) / (b.t - a.t) / std::max(v.speed, 0.5);
    }
    return v;
}

VehicleState interpolate_actor(const scenario::ActorTrajectory& trajectory, double t) {
    return interpolate_samples(trajectory.samples, t);
}

SimTrace run_scenario(const scenario::ConcreteScenario& scenario, EgoPolicy& policy,
                      const LatencyConfig& latency, double step, std::uint64_t seed,
                      const SimLimits& limits, const JitterConfig& jitter) {
    if (step <= 0.0 || step > 0.05) throw ConfigError("sim step must lie in (0, 0.05] s");
    latency.validate(step);

    SimTrace trace;
    trace.step = step;
    trace.seed = seed;

    const long n_steps = std::lround(scenario.duration / step);
    const long obs_steps = steps_of(latency.observation_delay(), step, "observation");
    const long act_steps = steps_of(latency.actuation_delay, step, "actuation");

    trace.ego.reserve(static_cast<std::size_t>(n_steps) + 1);
    trace.actors.reserve(static_cast<std::size_t>(n_steps) + 1);

    policy.reset();
    std::uint64_t rng_state = seed ^ 0xA5C9D3B7E1F06482ULL;

    std::vector<geom::Vec2> route;
    route.reserve(scenario.ego_nominal.size());
    for (const scenario::TrajectorySample& s : scenario.ego_nominal) route.push_back({s.x, s.y});

    VehicleState ego = scenario.ego_start;
    std::vector<ControlCommand> issued;
    issued.reserve(static_cast<std::size_t>(n_steps));
    const ControlCommand hold{scenario.ego_start.accel, scenario.ego_start.curvature};

    for (long k = 0;; ++k) {
        const double t = static_cast<double>(k) * step;
        std::vector<VehicleState> actor_states = actors_at(scenario, t);
        trace.ego.push_back(ego);
        trace.actors.push_back(actor_states);

        if (auto contact = contact_at(ego, scenario, actor_states, t)) {
            trace.first_contact = contact;
            break;
        }
        if (k >= n_steps) break;

        long delay = obs_steps;
        if (jitter.enabled) {
            delay = std::max<long>(0, delay + static_cast<long>(splitmix64(rng_state) % 3) - 1);
        }
        const long obs_index = std::max<long>(0, k - delay);
        const double t_obs = static_cast<double>(obs_index) * step;

        ObservedWorld observed;
        observed.t = t;
        observed.observation_time = t_obs;
        observed.ego = trace.ego[static_cast<std::size_t>(obs_index)];
        observed.ego_footprint = scenario.ego_footprint;
        observed.route = route;
        observed.nominal_speed = scenario.ego_start.speed;
        for (std::size_t i = 0; i < scenario.actor_trajectories.size(); ++i) {
            observed.actors.push_back({scenario.actor_trajectories[i].kind,
                                       trace.actors[static_cast<std::size_t>(obs_index)][i],
                                       scenario.actor_footprints[i]});
        }

        const ControlCommand cmd = policy.step(observed);
        if (!std::isfinite(cmd.longitudinal_accel) || !std::isfinite(cmd.curvature)) {
            trace.valid = false;
            trace.fault = "policy '" + std::string(policy.name()) +
                          "' returned a non-finite command at t=" + std::to_string(t);
            break;
        }
        issued.push_back(cmd);

        const ControlCommand effective = k >= act_steps
                                             ? issued[static_cast<std::size_t>(k - act_steps)]
                                             : hold;
        ego = integrate(ego, effective, step, limits);
    }
    return trace;
}

SimTrace run_scheduled(const scenario::ConcreteScenario& scenario, double switch_time,
                       const nieon::ControlSchedule& schedule, double step,
                       const SimLimits& limits) {
    if (step <= 0.0 || step > 0.05) throw ConfigError("sim step must lie in (0, 0.05] s");
    if (scenario.ego_nominal.empty()) {
        throw Error("scenario '" + scenario.id + "' has no nominal ego trajectory");
    }

    SimTrace trace;
    trace.step = step;

    const long n_steps = std::lround(scenario.duration / step);
    const long k_switch = static_cast<long>(std::ceil(switch_time / step - 1e-9));
    const double t_switch = static_cast<double>(k_switch) * step;

    VehicleState ego = interpolate_samples(scenario.ego_nominal, 0.0);
    for (long k = 0;; ++k) {
        const double t = static_cast<double>(k) * step;
        std::vector<VehicleState> actor_states = actors_at(scenario, t);
        trace.ego.push_back(ego);
        trace.actors.push_back(actor_states);

        if (auto contact = contact_at(ego, scenario, actor_states, t)) {
            trace.first_contact = contact;
            break;
        }
        if (k >= n_steps) break;

        if (k + 1 <= k_switch) {
            ego = interpolate_samples(scenario.ego_nominal, t + step);
        } else {
            const double tau = t - t_switch;
            ControlCommand cmd;
            cmd.longitudinal_accel = schedule.accel_at(tau);
            cmd.curvature = schedule.curvature_at(tau, ego.speed);
            ego = integrate(ego, cmd, step, limits);
        }
    }
    return trace;
}

void write_trace_csv(const SimTrace& trace, const scenario::ConcreteScenario& scenario,
                     std::ostream& out) {
    out << "t,ego_x,ego_y,ego_heading,ego_speed";
    for (std::size_t i = 0; i < scenario.actor_trajectories.size(); ++i) {
        out << ",actor" << i << "_x,actor" << i << "_y";
    }
    out << "\n";
    char buf[64];
    const auto emit = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.9g", v);
        out << buf;
    };
    for (std::size_t k = 0; k < trace.ego.size(); ++k) {
        emit(trace.time_at(k));
        out << ',';
        emit(trace.ego[k].x);
        out << ',';
        emit(trace.ego[k].y);
        out << ',';
        emit(trace.ego[k].heading);
        out << ',';
        emit(trace.ego[k].speed);
        for (const VehicleState& a : trace.actors[k]) {
            out << ',';
            emit(a.x);
            out << ',';
            emit(a.y);
        }
        out << "\n";
    }
}

}  // namespace cat::sim
