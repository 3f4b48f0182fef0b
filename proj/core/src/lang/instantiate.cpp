#include "cat/lang/instantiate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "cat/errors.hpp"

namespace cat::lang {

using scenario::ActorKind;
using scenario::ConcreteScenario;
using scenario::Location;
using scenario::LogicalScenario;
using scenario::Maneuver;
using scenario::TrajectorySample;

namespace {

constexpr double kSuddenStopDecel = 7.0;  // m/s^2
constexpr double kCutInMergeTime = 1.5;   // s
constexpr double kLaneOffset = 3.5;       // m

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Valuation {
    std::map<std::string, double> values;
};

std::vector<Valuation> grid_valuations(const LogicalScenario& logical,
                                       const SamplingPlan& plan) {
    std::vector<std::string> names;
    std::vector<std::vector<double>> axes;
    for (const auto& [name, range] : logical.parameter_ranges) {
        names.push_back(name);
        if (const auto pin = plan.pinned.find(name); pin != plan.pinned.end()) {
            axes.push_back({pin->second});
        } else {
            axes.push_back(grid_values(range));
        }
    }
    std::size_t total = 1;
    for (const auto& axis : axes) total *= axis.size();

    std::vector<Valuation> out;
    out.reserve(total);
    std::vector<std::size_t> index(axes.size(), 0);
    for (std::size_t row = 0; row < total; ++row) {
        Valuation v;
        for (std::size_t i = 0; i < axes.size(); ++i) v.values[names[i]] = axes[i][index[i]];
        out.push_back(std::move(v));
        for (std::size_t i = axes.size(); i-- > 0;) {
            if (++index[i] < axes[i].size()) break;
            index[i] = 0;
        }
    }
    return out;
}

std::vector<Valuation> lhs_valuations(const LogicalScenario& logical, const SamplingPlan& plan) {
    if (plan.samples <= 0) {
        throw ConfigError("latin hypercube sampling needs a positive sample count");
    }
    const std::size_t n = static_cast<std::size_t>(plan.samples);
    std::mt19937_64 rng(plan.seed);

    std::vector<Valuation> out(n);
    for (const auto& [name, range] : logical.parameter_ranges) {
        if (range.step <= 0.0 || range.min > range.max) {
            throw EmptyRange("parameter '" + name + "' has an empty range");
        }
        std::vector<std::size_t> bins(n);
        std::iota(bins.begin(), bins.end(), 0);
        for (std::size_t i = n; i-- > 1;) {
            std::swap(bins[i], bins[rng() % (i + 1)]);
        }
        const auto pin = plan.pinned.find(name);
        for (std::size_t i = 0; i < n; ++i) {
            double value;
            if (pin != plan.pinned.end()) {
                value = pin->second;
            } else {
                const double u = uniform01(rng);
                value = range.min + (range.max - range.min) *
                                        ((static_cast<double>(bins[i]) + u) / static_cast<double>(n));
            }
            out[i].values[name] = value;
        }
    }
    return out;
}

double require_param(const Valuation& v, const std::string& name) {
    const auto it = v.values.find(name);
    if (it == v.values.end()) {
        throw EmptyRange("template parameter '" + name + "' is not present in the logical scenario");
    }
    return it->second;
}

double optional_param(const Valuation& v, const std::string& name, double fallback) {
    const auto it = v.values.find(name);
    return it == v.values.end() ? fallback : it->second;
}

std::span<const geom::Vec2> route_span(const Route& route) { return route.points; }

/// Position series along a route with an arc-length schedule.
std::vector<TrajectorySample> samples_from_arcs(const Route& route,
                                                const std::vector<double>& arcs, double dt) {
    std::vector<TrajectorySample> samples(arcs.size());
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        const geom::Vec2 p = geom::polyline_point_at(route_span(route), arcs[k]);
        samples[k].t = static_cast<double>(k) * dt;
        samples[k].x = p.x;
        samples[k].y = p.y;
    }
    if (samples.size() < 2) {
        if (!samples.empty()) {
            samples[0].heading =
                geom::wrap_angle(geom::polyline_heading_at(route_span(route), arcs[0]));
        }
        return samples;
    }
    // Derive heading and speed from the motion itself; stationary samples
    // keep the route tangent at their arc position.
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const std::size_t next = std::min(k + 1, samples.size() - 1);
        const std::size_t prev = next == k ? k - 1 : k;
        const geom::Vec2 d{samples[next].x - samples[prev].x, samples[next].y - samples[prev].y};
        const double dist = geom::norm(d);
        if (dist > 1e-9) {
            samples[k].heading = geom::wrap_angle(std::atan2(d.y, d.x));
            samples[k].speed = dist / dt;
        } else {
            samples[k].heading =
                geom::wrap_angle(geom::polyline_heading_at(route_span(route), arcs[k]));
            samples[k].speed = 0.0;
        }
    }
    return samples;
}

std::vector<TrajectorySample> positions_to_samples(const std::vector<geom::Vec2>& positions,
                                                   double dt, double fallback_heading) {
    std::vector<TrajectorySample> samples(positions.size());
    for (std::size_t k = 0; k < positions.size(); ++k) {
        samples[k].t = static_cast<double>(k) * dt;
        samples[k].x = positions[k].x;
        samples[k].y = positions[k].y;
    }
    if (samples.size() < 2) {
        if (!samples.empty()) samples[0].heading = geom::wrap_angle(fallback_heading);
        return samples;
    }
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const std::size_t next = std::min(k + 1, samples.size() - 1);
        const std::size_t prev = next == k ? k - 1 : k;
        const geom::Vec2 d{samples[next].x - samples[prev].x, samples[next].y - samples[prev].y};
        const double dist = geom::norm(d);
        if (dist > 1e-9) {
            samples[k].heading = geom::wrap_angle(std::atan2(d.y, d.x));
            samples[k].speed = dist / dt;
        } else {
            samples[k].heading = geom::wrap_angle(fallback_heading);
            samples[k].speed = 0.0;
            if (k > 0) samples[k].heading = samples[k - 1].heading;
        }
    }
    return samples;
}

bool trigger_standing_template(Maneuver m) {
    return m == Maneuver::CrossPath || m == Maneuver::PullOut;
}

bool continuous_template(Maneuver m) {
    return m == Maneuver::GoStraight || m == Maneuver::RunRedLight || m == Maneuver::WrongWay ||
           m == Maneuver::TurnLeft || m == Maneuver::TurnRight;
}

}  // namespace

std::vector<double> grid_values(const scenario::ParameterRange& range) {
    if (range.step <= 0.0 || range.min > range.max) {
        throw EmptyRange("range [" + std::to_string(range.min) + ", " + std::to_string(range.max) +
                         "] step " + std::to_string(range.step) + " is empty");
    }
    const double span = (range.max - range.min) / range.step;
    const std::size_t n = static_cast<std::size_t>(std::ceil(span + 1.0 - 1e-9));
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(std::min(range.max, range.min + static_cast<double>(k) * range.step));
    }
    return out;
}

scenario::FootprintSpec footprint_of(ActorKind kind) {
    switch (kind) {
        case ActorKind::PassengerVehicle: return {4.8, 1.9};
        case ActorKind::HeavyVehicle: return {9.0, 2.5};
        case ActorKind::Motorcyclist: return {2.2, 0.9};
        case ActorKind::Cyclist: return {1.8, 0.7};
        case ActorKind::Pedestrian: return {0.6, 0.6};
        case ActorKind::PedestrianChild: return {0.4, 0.4};
        case ActorKind::ScooterRider: return {1.2, 0.7};
    }
    return {4.8, 1.9};
}

scenario::FootprintSpec ego_footprint() { return {4.8, 1.9}; }

std::vector<ConcreteScenario> instantiate_concrete(const LogicalScenario& logical,
                                                   const SamplingPlan& plan,
                                                   const LayoutLibrary& layouts,
                                                   const scenario::SafetyGroupRegistry& registry,
                                                   const InstantiateOptions& options) {
    const scenario::FunctionalScenario& fn = logical.functional;
    if (fn.actors.empty()) throw Error("functional scenario '" + fn.id + "' has no actors");
    for (const auto& [name, range] : logical.parameter_ranges) {
        if (range.step <= 0.0 || range.min > range.max) {
            throw EmptyRange("parameter '" + name + "' has an empty range");
        }
    }

    const Route& ego_route = layouts.require(
        fn.layout_class, {true, fn.ego_maneuver.maneuver, fn.ego_maneuver.start_location});
    const double ego_conflict_arc = geom::polyline_closest_arc(route_span(ego_route), {0, 0});

    const std::vector<Valuation> valuations = plan.mode == SamplingPlan::Mode::Grid
                                                  ? grid_valuations(logical, plan)
                                                  : lhs_valuations(logical, plan);

    const double t_conflict = options.approach_time;
    const double duration = options.approach_time + options.tail_time;
    const double dt = options.sample_dt;
    const std::size_t n_samples = static_cast<std::size_t>(std::lround(duration / dt)) + 1;

    std::vector<ConcreteScenario> out;
    out.reserve(valuations.size());
    int index = 0;
    for (const Valuation& v : valuations) {
        ConcreteScenario cs;
        char suffix[16];
        std::snprintf(suffix, sizeof(suffix), "__%03d", index++);
        cs.id = fn.id + suffix;
        cs.logical_parent = fn.id;
        cs.test_request = options.test_request;
        cs.conflict_type = fn.conflict_type;
        cs.duration = duration;
        cs.parameters = v.values;
        cs.ego_footprint = ego_footprint();

        const double ego_speed = require_param(v, "ego.speed");
        if (ego_speed <= 0.0) throw Error("ego.speed must be positive");

        // Nominal ego motion: constant speed along the route, reaching the
        // conflict point at t_conflict.
        std::vector<double> ego_arcs(n_samples);
        for (std::size_t k = 0; k < n_samples; ++k) {
            const double t = static_cast<double>(k) * dt;
            ego_arcs[k] = ego_conflict_arc - ego_speed * (t_conflict - t);
        }
        cs.ego_nominal = samples_from_arcs(ego_route, ego_arcs, dt);
        const TrajectorySample& start = cs.ego_nominal.front();
        cs.ego_start = {start.x, start.y, start.heading, start.speed, 0.0, 0.0};

        double primary_ttc = 0.0;
        for (std::size_t a = 0; a < fn.actors.size(); ++a) {
            const auto& [kind, spec] = fn.actors[a];
            const std::string prefix = "actor" + std::to_string(a);
            const double actor_speed = require_param(v, prefix + ".speed");
            const double trigger_ttc = require_param(v, prefix + ".trigger_ttc");
            if (trigger_ttc <= 0.0 || trigger_ttc > t_conflict) {
                throw Error("trigger_ttc must lie in (0, approach_time] for '" + cs.id + "'");
            }
            if (a == 0) primary_ttc = trigger_ttc;
            const double t_trigger = t_conflict - trigger_ttc;

            scenario::ActorTrajectory traj;
            traj.kind = kind;
            cs.actor_footprints.push_back(footprint_of(kind));

            if (spec.maneuver == Maneuver::SuddenStop || spec.maneuver == Maneuver::CutIn) {
                // Ego-relative templates in the same corridor.
                const double gap_time = optional_param(
                    v, prefix + ".gap_time", spec.maneuver == Maneuver::SuddenStop ? 2.0 : 1.2);
                const double body_gap =
                    (cs.ego_footprint.length + footprint_of(kind).length) * 0.5;
                const double base_arc =
                    ego_arcs[0] + ego_speed * gap_time + body_gap;

                std::vector<geom::Vec2> positions(n_samples);
                double arc = base_arc;
                double speed = actor_speed;
                for (std::size_t k = 0; k < n_samples; ++k) {
                    const double t = static_cast<double>(k) * dt;
                    if (spec.maneuver == Maneuver::SuddenStop && t >= t_trigger) {
                        speed = std::max(0.0, speed - kSuddenStopDecel * dt);
                    }
                    double lateral = 0.0;
                    if (spec.maneuver == Maneuver::CutIn) {
                        const double f =
                            std::clamp((t - t_trigger) / kCutInMergeTime, 0.0, 1.0);
                        lateral = kLaneOffset * (1.0 - f);
                    }
                    const geom::Vec2 base = geom::polyline_point_at(route_span(ego_route), arc);
                    const double h = geom::polyline_heading_at(route_span(ego_route), arc);
                    const geom::Vec2 normal{-std::sin(h), std::cos(h)};
                    positions[k] = base + normal * lateral;
                    arc += speed * dt;
                }
                traj.samples = positions_to_samples(
                    positions, dt, geom::polyline_heading_at(route_span(ego_route), base_arc));
            } else {
                const Route& route =
                    layouts.require(fn.layout_class, {false, spec.maneuver, spec.start_location});
                const double conflict_arc = geom::polyline_closest_arc(route_span(route), {0, 0});
                std::vector<double> arcs(n_samples);
                for (std::size_t k = 0; k < n_samples; ++k) {
                    const double t = static_cast<double>(k) * dt;
                    if (continuous_template(spec.maneuver)) {
                        arcs[k] = conflict_arc - actor_speed * (t_conflict - t);
                    } else if (trigger_standing_template(spec.maneuver)) {
                        const double moving_t = std::max(0.0, t - t_trigger);
                        arcs[k] = conflict_arc - actor_speed * trigger_ttc + actor_speed * moving_t;
                    } else {
                        throw Error("no trajectory template for maneuver '" +
                                    std::string(scenario::to_token(spec.maneuver)) + "'");
                    }
                }
                traj.samples = samples_from_arcs(route, arcs, dt);
            }
            cs.actor_trajectories.push_back(std::move(traj));
        }

        const double ramp_up = optional_param(v, "stimulus.ramp_up", options.default_ramp_up);
        cs.stimulus.onset_time = t_conflict - primary_ttc;
        cs.stimulus.end_time = std::min(duration, cs.stimulus.onset_time + ramp_up);

        cs.functional.layout_class = fn.layout_class;
        cs.functional.ego_maneuver = fn.ego_maneuver.maneuver;
        for (const auto& [kind, spec] : fn.actors) {
            cs.functional.actor_maneuvers.emplace_back(kind, spec.maneuver);
        }
        cs.functional.salient_factors = fn.salient_factors;

        cs.safety_group = !fn.conflict_type.empty()
                              ? registry.assign(fn.conflict_type,
                                                scenario::actor_class(fn.actors.front().first))
                                    .id
                              : "";
        out.push_back(std::move(cs));
    }

    std::sort(out.begin(), out.end(),
              [](const ConcreteScenario& a, const ConcreteScenario& b) { return a.id < b.id; });
    return out;
}

}  // namespace cat::lang
