#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "cat/scenario/types.hpp"
#include "cat/sim/geometry.hpp"

namespace cat::sim {

using scenario::FootprintSpec;
using scenario::VehicleState;

struct ObservedActor {
    scenario::ActorKind kind = scenario::ActorKind::PassengerVehicle;
    VehicleState state;
    FootprintSpec footprint;
};

/// What a policy may see: a latency-delayed snapshot of the world plus the
/// ego's own plan (route and nominal speed). Never ground truth.
struct ObservedWorld {
    double t = 0.0;                 // current decision time
    double observation_time = 0.0;  // timestamp of the delayed snapshot
    VehicleState ego;
    std::vector<ObservedActor> actors;
    FootprintSpec ego_footprint;
    std::span<const geom::Vec2> route;  // nominal route polyline, may be empty
    double nominal_speed = 0.0;
};

struct ControlCommand {
    double longitudinal_accel = 0.0;  // m/s^2
    double curvature = 0.0;           // 1/m
};

class EgoPolicy {
public:
    virtual ~EgoPolicy() = default;
    virtual void reset() {}
    virtual ControlCommand step(const ObservedWorld& observed) = 0;
    virtual std::string_view name() const = 0;
};

}  // namespace cat::sim
