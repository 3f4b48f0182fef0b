#include "cat/nieon/evaluate.hpp"

#include "cat/errors.hpp"

namespace cat::nieon {

std::tuple<bool, bool, double, double> CandidateOutcome::key() const {
    const double impact_speed =
        outcome.contact ? outcome.contact->relative_speed_at_impact : 0.0;
    return {outcome.collided, outcome.serious_injury, outcome.max_risk(), impact_speed};
}

NieonOutcome evaluate_nieon(const scenario::ConcreteScenario& scenario,
                            const ResponseTimeModel& rt_model, const ManeuverLimits& limits,
                            const severity::SeverityConfig& severity_config,
                            const NieonEvalOptions& options,
                            std::array<CandidateOutcome, 3>* candidates) {
    rt_model.validate();
    limits.validate();

    const double ramp_up = ramp_up_time(scenario.stimulus);
    const double reaction = scenario.stimulus.onset_time + response_time(rt_model, ramp_up);

    const scenario::VehicleState at_reaction =
        sim::interpolate_samples(scenario.ego_nominal, reaction);

    std::array<CandidateOutcome, 3> evaluated;
    const auto run_candidate = [&](ManeuverKind kind, const ControlSchedule& schedule) {
        const sim::SimTrace trace =
            sim::run_scheduled(scenario, reaction, schedule, options.step, options.sim_limits);
        CandidateOutcome c;
        c.maneuver = kind;
        c.outcome = severity::assess_outcome(scenario, trace, severity_config);
        c.evaluated = true;
        return c;
    };

    evaluated[0] = run_candidate(ManeuverKind::BrakeOnly, plan_brake(at_reaction, limits));
    if (at_reaction.speed > 0.0) {
        evaluated[1] = run_candidate(
            ManeuverKind::SwerveLeft,
            plan_swerve(SwerveDirection::Left, at_reaction, limits, options.swerve_includes_braking));
        evaluated[2] = run_candidate(
            ManeuverKind::SwerveRight,
            plan_swerve(SwerveDirection::Right, at_reaction, limits, options.swerve_includes_braking));
    } else {
        // Zero speed at reaction: swerving degenerates to braking in place.
        evaluated[1] = evaluated[0];
        evaluated[1].maneuver = ManeuverKind::SwerveLeft;
        evaluated[2] = evaluated[0];
        evaluated[2].maneuver = ManeuverKind::SwerveRight;
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < evaluated.size(); ++i) {
        if (evaluated[i].key() < evaluated[best].key()) best = i;
    }

    if (candidates != nullptr) *candidates = evaluated;

    NieonOutcome out;
    out.chosen_maneuver = evaluated[best].maneuver;
    out.outcome = evaluated[best].outcome;
    return out;
}

}  // namespace cat::nieon
