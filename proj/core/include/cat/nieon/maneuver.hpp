#pragma once

#include "cat/scenario/types.hpp"

namespace cat::nieon {

struct ManeuverLimits {
    double max_decel = 8.0;          // m/s^2
    double jerk_limit = 30.0;        // m/s^3
    double max_lateral_accel = 5.0;  // m/s^2
    double swerve_offset = 3.5;      // m

    void validate() const;
};

enum class ManeuverKind { BrakeOnly, SwerveLeft, SwerveRight };

std::string_view to_token(ManeuverKind kind);

/// Open-loop avoidance command profile, evaluated as a function of the time
/// since the reaction instant. Braking ramps from the initial acceleration
/// toward -max_decel at the jerk limit; swerves add a bang-bang lateral
/// acceleration profile that reaches the lane offset with zero residual
/// lateral velocity.
struct ControlSchedule {
    ManeuverKind kind = ManeuverKind::BrakeOnly;

    double initial_accel = 0.0;
    double jerk = 0.0;         // >0; may be +inf for instant ramp
    double target_decel = 0.0; // >= 0 magnitude
    bool braking = true;

    int lateral_sign = 0;           // +1 left, -1 right, 0 none
    double lateral_accel_mag = 0.0; // m/s^2
    double swerve_duration = 0.0;   // s, full bang-bang duration

    double base_curvature = 0.0;  // held path curvature at the reaction instant

    double accel_at(double tau) const;
    double lateral_accel_at(double tau) const;
    double curvature_at(double tau, double speed) const;
};

ControlSchedule plan_brake(const scenario::VehicleState& state, const ManeuverLimits& limits);

enum class SwerveDirection { Left, Right };

/// Throws DegenerateSpeed at zero speed (a swerve degenerates to braking).
ControlSchedule plan_swerve(SwerveDirection direction, const scenario::VehicleState& state,
                            const ManeuverLimits& limits, bool brake_during_swerve = true);

}  // namespace cat::nieon
