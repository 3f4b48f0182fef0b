#pragma once

#include <optional>

#include "cat/scenario/types.hpp"
#include "cat/sim/geometry.hpp"

namespace cat::sim {

enum class ImpactZone { Frontal, RearTwoThirds };

struct Contact {
    double time = 0.0;
    geom::Vec2 point;  // world frame
    ImpactZone ego_zone = ImpactZone::Frontal;
    double relative_speed_at_impact = 0.0;  // m/s
    bool ego_stationary = false;            // ego speed < 0.1 m/s at contact
    int partner_index = -1;
};

/// Oriented-rectangle overlap (separating axis, closed convention). Returns
/// the contact point (overlap-polygon centroid) when the footprints touch.
std::optional<geom::Vec2> detect_contact(const scenario::VehicleState& ego,
                                         const scenario::FootprintSpec& ego_footprint,
                                         const scenario::VehicleState& actor,
                                         const scenario::FootprintSpec& actor_footprint);

/// Frontal iff the contact point's longitudinal coordinate (ego frame) lies
/// in the front third of the footprint; the boundary at +length/6 counts as
/// frontal. Throws PointOutsideFootprint when the point is off the body.
ImpactZone classify_impact_zone(geom::Vec2 point_in_ego_frame,
                                const scenario::FootprintSpec& ego_footprint);

geom::Vec2 world_to_body(geom::Vec2 world_point, const scenario::VehicleState& body);

}  // namespace cat::sim
