#pragma once

#include "cat/sim/geometry.hpp"

namespace cat::severity {

/// Planar central-impact configuration. contact_normal points from the ego
/// body toward the partner body; pdof_ego is the principal direction of
/// force in the ego frame, supplied by the caller (the simulation knows the
/// ego heading at contact).
struct ImpactConfig {
    double mass_ego = 0.0;      // kg
    double mass_partner = 0.0;  // kg
    geom::Vec2 velocity_ego;
    geom::Vec2 velocity_partner;
    double restitution = 0.0;  // in [0, 1]
    geom::Vec2 contact_normal;  // unit vector
    double pdof_ego = 0.0;      // rad
};

struct DeltaV {
    double dv_ego = 0.0;      // m/s
    double dv_partner = 0.0;  // m/s
    double pdof_ego = 0.0;    // rad
    double pdof_partner = 0.0;

    geom::Vec2 post_velocity_ego;
    geom::Vec2 post_velocity_partner;
};

/// Impulse-momentum exchange for a central planar impact:
/// J = (1+e) * mu * (v_rel . n), mu = m1*m2/(m1+m2), dv_i = J/m_i.
/// Momentum is conserved exactly. Throws SeparatingBodies when the bodies
/// are not approaching along the contact normal.
DeltaV compute_delta_v(const ImpactConfig& impact);

}  // namespace cat::severity
