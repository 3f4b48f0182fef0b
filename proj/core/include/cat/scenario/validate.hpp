#pragma once

#include <string>
#include <vector>

#include "cat/scenario/safety_groups.hpp"
#include "cat/scenario/types.hpp"

namespace cat::scenario {

struct Violation {
    std::string invariant;  // short name of the violated invariant
    std::string path;       // field path, e.g. "actor_trajectories[1].samples[3].t"
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/// Structural validation of a concrete scenario. Violations are data, not
/// faults: the report lists every broken invariant with its field path.
ValidationReport validate_concrete(const ConcreteScenario& scenario,
                                   const SafetyGroupRegistry& registry);

}  // namespace cat::scenario
