#include "cat/severity/impulse.hpp"

#include <cmath>

#include "cat/errors.hpp"

namespace cat::severity {

DeltaV compute_delta_v(const ImpactConfig& impact) {
    if (impact.mass_ego <= 0.0 || impact.mass_partner <= 0.0) {
        throw Error("impact masses must be positive");
    }
    const double n_len = geom::norm(impact.contact_normal);
    if (std::abs(n_len - 1.0) > 1e-9) {
        throw Error("contact_normal must be a unit vector");
    }
    const geom::Vec2 n = impact.contact_normal;
    const geom::Vec2 v_rel = impact.velocity_ego - impact.velocity_partner;
    const double closing = geom::dot(v_rel, n);
    if (closing <= 0.0) {
        throw SeparatingBodies("bodies not approaching along contact normal (closing speed " +
                               std::to_string(closing) + ")");
    }

    const double mu = impact.mass_ego * impact.mass_partner / (impact.mass_ego + impact.mass_partner);
    const double impulse = (1.0 + impact.restitution) * mu * closing;

    DeltaV out;
    out.dv_ego = impulse / impact.mass_ego;
    out.dv_partner = impulse / impact.mass_partner;
    out.post_velocity_ego = impact.velocity_ego - n * out.dv_ego;
    out.post_velocity_partner = impact.velocity_partner + n * out.dv_partner;
    out.pdof_ego = impact.pdof_ego;

    // Partner PDOF: direction of the impulse (+n) relative to the partner's
    // direction of travel; world frame when the partner is at rest.
    const double impulse_angle = std::atan2(n.y, n.x);
    if (geom::norm(impact.velocity_partner) > 0.1) {
        const double travel =
            std::atan2(impact.velocity_partner.y, impact.velocity_partner.x);
        out.pdof_partner = geom::wrap_angle(impulse_angle - travel);
    } else {
        out.pdof_partner = geom::wrap_angle(impulse_angle);
    }
    return out;
}

}  // namespace cat::severity
