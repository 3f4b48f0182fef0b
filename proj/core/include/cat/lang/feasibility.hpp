#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "cat/scenario/types.hpp"

namespace cat::lang {

/// Relative placement of the initiating actor, derived from its start
/// location token.
enum class Placement { SameCorridor, Opposing, CurbsideZone, CrosswalkZone, DrivewayZone, OffRoadZone };

Placement placement_of(scenario::Location start_location);
std::string_view to_token(Placement placement);

struct FeasibilityKey {
    scenario::Maneuver ego_maneuver = scenario::Maneuver::GoStraight;
    scenario::Maneuver actor_maneuver = scenario::Maneuver::GoStraight;
    Placement placement = Placement::SameCorridor;

    auto operator<=>(const FeasibilityKey&) const = default;
};

/// Rule table of geometric conflict possibility, authored against the
/// bundled layout geometry (and verified against the trajectory-intersection
/// oracle in the test suite).
class FeasibilityRules {
public:
    static FeasibilityRules bundled();

    void set(const FeasibilityKey& key, bool feasible);
    std::optional<bool> lookup(const FeasibilityKey& key) const;
    const std::map<FeasibilityKey, bool>& rules() const { return rules_; }

private:
    std::map<FeasibilityKey, bool> rules_;
};

struct FeasibilityDecision {
    bool feasible = true;
    bool fully_mapped = true;  // false when any pair fell back to the conservative default
};

/// True when at least one (ego maneuver, actor maneuver, placement) triple of
/// the scenario can intersect paths. Unmapped triples default to feasible and
/// are reported through the warn sink (conservative inclusion).
FeasibilityDecision filter_conflict_feasible(
    const scenario::FunctionalScenario& scenario, const FeasibilityRules& rules,
    const std::function<void(const std::string&)>& warn = {});

}  // namespace cat::lang
