#pragma once

#include <array>
#include <optional>

#include "cat/nieon/maneuver.hpp"
#include "cat/nieon/response_time.hpp"
#include "cat/severity/assess.hpp"

namespace cat::nieon {

struct CandidateOutcome {
    ManeuverKind maneuver = ManeuverKind::BrakeOnly;
    severity::PartyOutcome outcome;
    bool evaluated = false;

    /// Ordering key: (collided, serious injury, max risk, impact speed).
    std::tuple<bool, bool, double, double> key() const;
};

struct NieonOutcome {
    ManeuverKind chosen_maneuver = ManeuverKind::BrakeOnly;
    severity::PartyOutcome outcome;

    bool collided() const { return outcome.collided; }
    bool serious_injury() const { return outcome.serious_injury; }
};

struct NieonEvalOptions {
    double step = 0.01;
    bool swerve_includes_braking = true;
    sim::SimLimits sim_limits;
};

/// Best-of-three reference-driver evaluation: replay the nominal ego motion
/// until stimulus onset plus the model response time, then simulate braking
/// and both swerves and keep the candidate with the minimal ordering key.
/// Ties resolve BrakeOnly < SwerveLeft < SwerveRight. When `candidates` is
/// given, all three evaluated outcomes are returned for dominance checks.
NieonOutcome evaluate_nieon(const scenario::ConcreteScenario& scenario,
                            const ResponseTimeModel& rt_model, const ManeuverLimits& limits,
                            const severity::SeverityConfig& severity_config,
                            const NieonEvalOptions& options = {},
                            std::array<CandidateOutcome, 3>* candidates = nullptr);

}  // namespace cat::nieon
