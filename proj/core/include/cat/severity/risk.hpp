#pragma once

#include <map>

#include "cat/scenario/types.hpp"

namespace cat::severity {

struct InjuryRisk {
    double p_mais3plus = 0.0;  // in [0, 1]
};

struct LogisticCurve {
    double intercept = 0.0;
    double slope = 0.0;  // > 0: risk rises with exposure
};

/// Omni-directional vehicle-occupant curve: logistic over delta-v with
/// first-order directional terms in the principal direction of force.
struct VehicleRiskCurve {
    double intercept = -6.0;
    double slope = 0.4;      // per m/s of delta-v
    double cos_coeff = -0.3;
    double sin_coeff = 0.1;
};

/// Shipped coefficients are structural placeholders: monotone in exposure
/// and near zero at zero exposure. Studies should load published curves
/// through the harness config.
struct RiskCurveParams {
    VehicleRiskCurve vehicle;
    std::map<scenario::ActorKind, LogisticCurve> vru;

    static RiskCurveParams defaults();
};

InjuryRisk p_mais3_vehicle(double delta_v, double pdof, const RiskCurveParams& params);

/// Impact-speed risk for pedestrians, cyclists, scooter riders, and
/// motorcyclists. Throws NotVruClass for vehicle actor kinds.
InjuryRisk p_mais3_vru(double impact_speed, scenario::ActorKind kind,
                       const RiskCurveParams& params);

struct SeriousInjuryThresholds {
    double vehicle_to_vehicle = 0.05;
    double child_pedestrian = 0.015;
    double other_vru = 0.10;
};

/// Inclusive comparison: risk >= the class threshold counts as serious.
bool is_serious_injury(InjuryRisk risk, scenario::ActorKind kind,
                       const SeriousInjuryThresholds& thresholds);

double threshold_for(scenario::ActorKind kind, const SeriousInjuryThresholds& thresholds);

struct SeverityConfig {
    RiskCurveParams curves = RiskCurveParams::defaults();
    SeriousInjuryThresholds thresholds;
    double restitution = 0.1;
    double ego_mass = 2200.0;  // kg
    std::map<scenario::ActorKind, double> partner_masses;

    static SeverityConfig defaults();
    double mass_of(scenario::ActorKind kind) const;
};

}  // namespace cat::severity
