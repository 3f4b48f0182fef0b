#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "cat/scenario/types.hpp"
#include "cat/severity/risk.hpp"
#include "cat/sim/engine.hpp"

namespace cat::severity {

/// Collision outcome of one party (the ADS policy or the reference driver)
/// on one scenario: contact record plus per-actor injury risks.
struct PartyOutcome {
    bool collided = false;
    std::optional<sim::Contact> contact;
    std::vector<double> actor_risks;  // p(MAIS3+) per scenario actor; 0 when uninvolved
    double ego_occupant_risk = 0.0;
    bool serious_injury = false;

    double max_risk() const {
        double m = ego_occupant_risk;
        for (double r : actor_risks) m = std::max(m, r);
        return m;
    }
};

/// Scores a finished trace: no contact means zero severity everywhere.
/// Vehicle-class partners get impulse-momentum delta-v risk for both
/// occupants; impact-speed classes get the ego speed magnitude fed through
/// their class curve, with the partner treated as effectively massless.
PartyOutcome assess_outcome(const scenario::ConcreteScenario& scenario,
                            const sim::SimTrace& trace, const SeverityConfig& config);

}  // namespace cat::severity
