#include "cat/severity/assess.hpp"

#include <cmath>

#include "cat/severity/impulse.hpp"

namespace cat::severity {

namespace {

geom::Vec2 velocity_of(const scenario::VehicleState& s) {
    return {std::cos(s.heading) * s.speed, std::sin(s.heading) * s.speed};
}

}  // namespace

PartyOutcome assess_outcome(const scenario::ConcreteScenario& scenario,
                            const sim::SimTrace& trace, const SeverityConfig& config) {
    PartyOutcome out;
    out.actor_risks.assign(scenario.actor_trajectories.size(), 0.0);
    if (!trace.first_contact) return out;

    const sim::Contact& contact = *trace.first_contact;
    out.collided = true;
    out.contact = contact;

    const scenario::VehicleState& ego = trace.ego.back();
    const std::size_t partner = static_cast<std::size_t>(contact.partner_index);
    const scenario::VehicleState& actor = trace.actors.back().at(partner);
    const scenario::ActorKind kind = scenario.actor_trajectories[partner].kind;

    const geom::Vec2 v_ego = velocity_of(ego);
    const geom::Vec2 v_actor = velocity_of(actor);

    if (!scenario::uses_impact_speed_risk(kind)) {
        geom::Vec2 normal = geom::normalized(contact.point - geom::Vec2{ego.x, ego.y});
        if (geom::norm(contact.point - geom::Vec2{ego.x, ego.y}) < 1e-9) {
            normal = {std::cos(ego.heading), std::sin(ego.heading)};
        }
        const double closing = geom::dot(v_ego - v_actor, normal);
        if (closing > 0.0) {
            ImpactConfig impact;
            impact.mass_ego = config.ego_mass;
            impact.mass_partner = config.mass_of(kind);
            impact.velocity_ego = v_ego;
            impact.velocity_partner = v_actor;
            impact.restitution = config.restitution;
            impact.contact_normal = normal;
            impact.pdof_ego =
                geom::wrap_angle(std::atan2(-normal.y, -normal.x) - ego.heading);
            const DeltaV dv = compute_delta_v(impact);
            out.ego_occupant_risk = p_mais3_vehicle(dv.dv_ego, dv.pdof_ego, config.curves).p_mais3plus;
            out.actor_risks[partner] =
                p_mais3_vehicle(dv.dv_partner, dv.pdof_partner, config.curves).p_mais3plus;
        } else {
            // Grazing contact with no closing speed: no impulse, zero delta-v.
            out.ego_occupant_risk = p_mais3_vehicle(0.0, 0.0, config.curves).p_mais3plus;
            out.actor_risks[partner] = p_mais3_vehicle(0.0, 0.0, config.curves).p_mais3plus;
        }
    } else {
        const double impact_speed = geom::norm(v_ego);
        out.actor_risks[partner] = p_mais3_vru(impact_speed, kind, config.curves).p_mais3plus;
        out.ego_occupant_risk = p_mais3_vehicle(0.0, 0.0, config.curves).p_mais3plus;
    }

    out.serious_injury =
        is_serious_injury(InjuryRisk{out.actor_risks[partner]}, kind, config.thresholds) ||
        is_serious_injury(InjuryRisk{out.ego_occupant_risk}, scenario::ActorKind::PassengerVehicle,
                          config.thresholds);
    return out;
}

}  // namespace cat::severity
