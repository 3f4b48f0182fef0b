#include "cat/sim/contact.hpp"

#include <cmath>

#include "cat/errors.hpp"

namespace cat::sim {

namespace {

geom::OrientedRect body_rect(const scenario::VehicleState& state,
                             const scenario::FootprintSpec& footprint) {
    return geom::OrientedRect{{state.x, state.y}, state.heading, footprint.length, footprint.width};
}

}  // namespace

std::optional<geom::Vec2> detect_contact(const scenario::VehicleState& ego,
                                         const scenario::FootprintSpec& ego_footprint,
                                         const scenario::VehicleState& actor,
                                         const scenario::FootprintSpec& actor_footprint) {
    const geom::OrientedRect a = body_rect(ego, ego_footprint);
    const geom::OrientedRect b = body_rect(actor, actor_footprint);
    if (!geom::rects_overlap(a, b)) return std::nullopt;
    return geom::contact_point(a, b);
}

ImpactZone classify_impact_zone(geom::Vec2 p, const scenario::FootprintSpec& fp) {
    constexpr double tol = 1e-6;
    if (std::abs(p.x) > fp.length * 0.5 + tol || std::abs(p.y) > fp.width * 0.5 + tol) {
        throw PointOutsideFootprint("contact point (" + std::to_string(p.x) + ", " +
                                    std::to_string(p.y) + ") outside footprint " +
                                    std::to_string(fp.length) + "x" + std::to_string(fp.width));
    }
    // Front third spans [L/6, L/2]; the boundary itself is frontal.
    return p.x >= fp.length / 6.0 - 1e-12 ? ImpactZone::Frontal : ImpactZone::RearTwoThirds;
}

geom::Vec2 world_to_body(geom::Vec2 world_point, const scenario::VehicleState& body) {
    const geom::Vec2 d{world_point.x - body.x, world_point.y - body.y};
    return geom::rotate(d, -body.heading);
}

}  // namespace cat::sim
