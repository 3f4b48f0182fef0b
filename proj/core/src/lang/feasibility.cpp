#include "cat/lang/feasibility.hpp"

namespace cat::lang {

using scenario::Location;
using scenario::Maneuver;

Placement placement_of(Location start_location) {
    switch (start_location) {
        case Location::WithinLane: return Placement::SameCorridor;
        case Location::AcrossLane: return Placement::Opposing;
        case Location::Curbside: return Placement::CurbsideZone;
        case Location::Crosswalk: return Placement::CrosswalkZone;
        case Location::Driveway: return Placement::DrivewayZone;
        case Location::OffRoad: return Placement::OffRoadZone;
    }
    return Placement::SameCorridor;
}

std::string_view to_token(Placement placement) {
    switch (placement) {
        case Placement::SameCorridor: return "same_corridor";
        case Placement::Opposing: return "opposing";
        case Placement::CurbsideZone: return "curbside";
        case Placement::CrosswalkZone: return "crosswalk";
        case Placement::DrivewayZone: return "driveway";
        case Placement::OffRoadZone: return "off_road";
    }
    return "same_corridor";
}

FeasibilityRules FeasibilityRules::bundled() {
    FeasibilityRules r;
    const auto set = [&](Maneuver ego, Maneuver actor, Placement placement, bool feasible) {
        r.set({ego, actor, placement}, feasible);
    };

    // Ego going straight.
    set(Maneuver::GoStraight, Maneuver::CrossPath, Placement::CurbsideZone, true);
    set(Maneuver::GoStraight, Maneuver::CrossPath, Placement::CrosswalkZone, true);
    set(Maneuver::GoStraight, Maneuver::GoStraight, Placement::Opposing, false);
    set(Maneuver::GoStraight, Maneuver::GoStraight, Placement::SameCorridor, false);
    set(Maneuver::GoStraight, Maneuver::WrongWay, Placement::Opposing, true);
    set(Maneuver::GoStraight, Maneuver::SuddenStop, Placement::SameCorridor, true);
    set(Maneuver::GoStraight, Maneuver::CutIn, Placement::SameCorridor, true);
    set(Maneuver::GoStraight, Maneuver::PullOut, Placement::CurbsideZone, true);
    set(Maneuver::GoStraight, Maneuver::PullOut, Placement::DrivewayZone, true);
    set(Maneuver::GoStraight, Maneuver::RunRedLight, Placement::Opposing, true);
    set(Maneuver::GoStraight, Maneuver::TurnLeft, Placement::Opposing, true);
    // Opposing right turn exits away from the ego street.
    set(Maneuver::GoStraight, Maneuver::TurnRight, Placement::Opposing, false);

    // Ego turning left.
    set(Maneuver::TurnLeft, Maneuver::CrossPath, Placement::CrosswalkZone, true);
    set(Maneuver::TurnLeft, Maneuver::CrossPath, Placement::CurbsideZone, false);
    set(Maneuver::TurnLeft, Maneuver::GoStraight, Placement::Opposing, true);
    set(Maneuver::TurnLeft, Maneuver::GoStraight, Placement::SameCorridor, true);
    set(Maneuver::TurnLeft, Maneuver::WrongWay, Placement::Opposing, true);
    set(Maneuver::TurnLeft, Maneuver::SuddenStop, Placement::SameCorridor, true);
    set(Maneuver::TurnLeft, Maneuver::CutIn, Placement::SameCorridor, true);
    set(Maneuver::TurnLeft, Maneuver::RunRedLight, Placement::Opposing, true);
    set(Maneuver::TurnLeft, Maneuver::TurnLeft, Placement::Opposing, true);
    set(Maneuver::TurnLeft, Maneuver::TurnRight, Placement::Opposing, true);

    // Ego turning right.
    set(Maneuver::TurnRight, Maneuver::CrossPath, Placement::CrosswalkZone, true);
    set(Maneuver::TurnRight, Maneuver::CrossPath, Placement::CurbsideZone, false);
    set(Maneuver::TurnRight, Maneuver::GoStraight, Placement::Opposing, false);
    set(Maneuver::TurnRight, Maneuver::GoStraight, Placement::SameCorridor, false);
    set(Maneuver::TurnRight, Maneuver::WrongWay, Placement::Opposing, true);
    set(Maneuver::TurnRight, Maneuver::SuddenStop, Placement::SameCorridor, true);
    set(Maneuver::TurnRight, Maneuver::CutIn, Placement::SameCorridor, true);
    set(Maneuver::TurnRight, Maneuver::RunRedLight, Placement::Opposing, true);
    set(Maneuver::TurnRight, Maneuver::TurnLeft, Placement::Opposing, true);
    // Two right turns from opposing directions cannot meet.
    set(Maneuver::TurnRight, Maneuver::TurnRight, Placement::Opposing, false);

    return r;
}

void FeasibilityRules::set(const FeasibilityKey& key, bool feasible) { rules_[key] = feasible; }

std::optional<bool> FeasibilityRules::lookup(const FeasibilityKey& key) const {
    const auto it = rules_.find(key);
    if (it == rules_.end()) return std::nullopt;
    return it->second;
}

FeasibilityDecision filter_conflict_feasible(
    const scenario::FunctionalScenario& scenario, const FeasibilityRules& rules,
    const std::function<void(const std::string&)>& warn) {
    FeasibilityDecision decision;
    decision.feasible = false;
    for (const auto& [kind, spec] : scenario.actors) {
        const FeasibilityKey key{scenario.ego_maneuver.maneuver, spec.maneuver,
                                 placement_of(spec.start_location)};
        const std::optional<bool> rule = rules.lookup(key);
        if (!rule) {
            decision.fully_mapped = false;
            decision.feasible = true;  // conservative inclusion
            if (warn) {
                warn("unmapped feasibility triple (" +
                     std::string(scenario::to_token(key.ego_maneuver)) + ", " +
                     std::string(scenario::to_token(key.actor_maneuver)) + ", " +
                     std::string(to_token(key.placement)) + ") in scenario '" + scenario.id +
                     "'; treated as feasible");
            }
        } else if (*rule) {
            decision.feasible = true;
        }
    }
    return decision;
}

}  // namespace cat::lang
