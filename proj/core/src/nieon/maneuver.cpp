#include "cat/nieon/maneuver.hpp"

#include <algorithm>
#include <cmath>

#include "cat/errors.hpp"

namespace cat::nieon {

void ManeuverLimits::validate() const {
    if (max_decel <= 0.0 || jerk_limit <= 0.0 || max_lateral_accel <= 0.0 || swerve_offset <= 0.0) {
        throw ConfigError("maneuver limits must be strictly positive");
    }
}

std::string_view to_token(ManeuverKind kind) {
    switch (kind) {
        case ManeuverKind::BrakeOnly: return "brake_only";
        case ManeuverKind::SwerveLeft: return "swerve_left";
        case ManeuverKind::SwerveRight: return "swerve_right";
    }
    return "brake_only";
}

double ControlSchedule::accel_at(double tau) const {
    if (!braking || tau < 0.0) return 0.0;
    if (std::isinf(jerk)) return -target_decel;
    return std::max(-target_decel, initial_accel - jerk * tau);
}

double ControlSchedule::lateral_accel_at(double tau) const {
    if (lateral_sign == 0 || tau < 0.0 || tau >= swerve_duration) return 0.0;
    const double half = swerve_duration * 0.5;
    const double mag = tau < half ? lateral_accel_mag : -lateral_accel_mag;
    return static_cast<double>(lateral_sign) * mag;
}

double ControlSchedule::curvature_at(double tau, double speed) const {
    const double lat = lateral_accel_at(tau);
    if (lat == 0.0) return base_curvature;
    const double v = std::max(speed, 0.5);
    return base_curvature + lat / (v * v);
}

ControlSchedule plan_brake(const scenario::VehicleState& state, const ManeuverLimits& limits) {
    limits.validate();
    ControlSchedule s;
    s.kind = ManeuverKind::BrakeOnly;
    s.braking = state.speed > 0.0;
    s.initial_accel = std::min(state.accel, 0.0);
    s.jerk = limits.jerk_limit;
    s.target_decel = state.speed > 0.0 ? limits.max_decel : 0.0;
    s.base_curvature = state.curvature;
    return s;
}

ControlSchedule plan_swerve(SwerveDirection direction, const scenario::VehicleState& state,
                            const ManeuverLimits& limits, bool brake_during_swerve) {
    limits.validate();
    if (state.speed <= 0.0) {
        throw DegenerateSpeed("cannot swerve at zero speed");
    }
    ControlSchedule s;
    s.kind = direction == SwerveDirection::Left ? ManeuverKind::SwerveLeft
                                                : ManeuverKind::SwerveRight;
    s.braking = brake_during_swerve;
    s.initial_accel = std::min(state.accel, 0.0);
    s.jerk = limits.jerk_limit;
    s.target_decel = brake_during_swerve ? limits.max_decel : 0.0;
    s.lateral_sign = direction == SwerveDirection::Left ? 1 : -1;
    s.lateral_accel_mag = limits.max_lateral_accel;
    // Bang-bang double integrator: offset = a*(T/2)^2 => T = 2*sqrt(offset/a).
    s.swerve_duration = 2.0 * std::sqrt(limits.swerve_offset / limits.max_lateral_accel);
    s.base_curvature = state.curvature;
    return s;
}

}  // namespace cat::nieon
