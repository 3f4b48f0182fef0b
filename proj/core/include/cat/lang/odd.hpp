#pragma once

#include <span>
#include <string>
#include <vector>

#include "cat/lang/enumerate.hpp"
#include "cat/scenario/types.hpp"

namespace cat::lang {

/// A vocabulary combination applicable under the new ODD with no coverage in
/// the database.
struct GapCategory {
    scenario::Maneuver ego_maneuver = scenario::Maneuver::GoStraight;
    scenario::ActorKind actor_kind = scenario::ActorKind::PassengerVehicle;
    scenario::Maneuver actor_maneuver = scenario::Maneuver::GoStraight;
    std::string layout_class;
    std::set<scenario::SalientFactor> salient_factors;

    bool operator==(const GapCategory&) const = default;
};

struct CoverageDiff {
    std::vector<std::string> carried_over;  // scenario ids consistent with the new ODD
    std::vector<std::string> excluded;      // scenario ids dropped by the new ODD
    std::vector<GapCategory> gap_categories;
};

/// True when the scenario's layout, ego maneuver, salient factors, and ego
/// speed all fall inside the profile.
bool scenario_consistent_with(const scenario::ConcreteScenario& scenario, const OddProfile& odd);

/// Partitions a database between ODD revisions and lists the newly applicable
/// vocabulary combinations (feasible under new_odd but not old_odd) that have
/// no scenarios yet.
CoverageDiff diff_odd_coverage(std::span<const scenario::ConcreteScenario> db,
                               const OddProfile& old_odd, const OddProfile& new_odd,
                               const EnumerationVocab& vocab);

std::string coverage_diff_to_json(const CoverageDiff& diff);

}  // namespace cat::lang
