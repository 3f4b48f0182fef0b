#include "cat/severity/risk.hpp"

#include <algorithm>
#include <cmath>

#include "cat/errors.hpp"

namespace cat::severity {

namespace {

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

RiskCurveParams RiskCurveParams::defaults() {
    using scenario::ActorKind;
    RiskCurveParams p;
    p.vru[ActorKind::Pedestrian] = {-6.5, 0.45};
    p.vru[ActorKind::PedestrianChild] = {-6.2, 0.48};
    p.vru[ActorKind::Cyclist] = {-6.8, 0.40};
    p.vru[ActorKind::ScooterRider] = {-6.6, 0.42};
    p.vru[ActorKind::Motorcyclist] = {-6.0, 0.50};
    return p;
}

InjuryRisk p_mais3_vehicle(double delta_v, double pdof, const RiskCurveParams& params) {
    if (delta_v < 0.0) throw Error("delta_v must be non-negative");
    const VehicleRiskCurve& c = params.vehicle;
    const double x = c.intercept + c.slope * delta_v + c.cos_coeff * std::cos(pdof) +
                     c.sin_coeff * std::sin(pdof);
    return InjuryRisk{std::clamp(logistic(x), 0.0, 1.0)};
}

InjuryRisk p_mais3_vru(double impact_speed, scenario::ActorKind kind,
                       const RiskCurveParams& params) {
    if (impact_speed < 0.0) throw Error("impact_speed must be non-negative");
    if (!scenario::uses_impact_speed_risk(kind)) {
        throw NotVruClass("actor kind '" + std::string(scenario::to_token(kind)) +
                          "' is not scored with impact-speed risk");
    }
    const auto it = params.vru.find(kind);
    if (it == params.vru.end()) {
        throw ConfigError("no risk curve registered for '" +
                          std::string(scenario::to_token(kind)) + "'");
    }
    const double x = it->second.intercept + it->second.slope * impact_speed;
    return InjuryRisk{std::clamp(logistic(x), 0.0, 1.0)};
}

double threshold_for(scenario::ActorKind kind, const SeriousInjuryThresholds& thresholds) {
    using scenario::ActorKind;
    switch (kind) {
        case ActorKind::PassengerVehicle:
        case ActorKind::HeavyVehicle:
            return thresholds.vehicle_to_vehicle;
        case ActorKind::PedestrianChild:
            return thresholds.child_pedestrian;
        default:
            return thresholds.other_vru;
    }
}

bool is_serious_injury(InjuryRisk risk, scenario::ActorKind kind,
                       const SeriousInjuryThresholds& thresholds) {
    return risk.p_mais3plus >= threshold_for(kind, thresholds);
}

SeverityConfig SeverityConfig::defaults() {
    using scenario::ActorKind;
    SeverityConfig c;
    c.partner_masses[ActorKind::PassengerVehicle] = 1800.0;
    c.partner_masses[ActorKind::HeavyVehicle] = 12000.0;
    c.partner_masses[ActorKind::Motorcyclist] = 300.0;
    c.partner_masses[ActorKind::Cyclist] = 90.0;
    c.partner_masses[ActorKind::Pedestrian] = 75.0;
    c.partner_masses[ActorKind::PedestrianChild] = 30.0;
    c.partner_masses[ActorKind::ScooterRider] = 85.0;
    return c;
}

double SeverityConfig::mass_of(scenario::ActorKind kind) const {
    const auto it = partner_masses.find(kind);
    if (it == partner_masses.end()) {
        throw ConfigError("no mass configured for '" + std::string(scenario::to_token(kind)) + "'");
    }
    return it->second;
}

}  // namespace cat::severity
