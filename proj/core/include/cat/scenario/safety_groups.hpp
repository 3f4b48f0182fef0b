#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cat/scenario/types.hpp"

namespace cat::scenario {

/// Registry of safety groups. The groups double as the rule table for
/// assignment: a scenario's (conflict_type, partner class) pair must match
/// exactly one registered group.
class SafetyGroupRegistry {
public:
    void register_group(SafetyGroup group);

    const SafetyGroup* find(std::string_view id) const;
    const std::vector<SafetyGroup>& groups() const { return groups_; }
    bool empty() const { return groups_.empty(); }

    /// Rule lookup; throws UnmappedConflict when no rule covers the pair.
    const SafetyGroup& assign(std::string_view conflict_type, ActorClass partner) const;

    static SafetyGroupRegistry from_json_file(const std::filesystem::path& path);
    std::string to_json() const;

private:
    std::vector<SafetyGroup> groups_;
};

/// Deterministic safety-group assignment from the scenario's conflict type
/// and the class of its first (conflict-partner) actor.
std::string assign_safety_group(const ConcreteScenario& scenario,
                                const SafetyGroupRegistry& registry);

RoadUserGroup road_user_group_of(const ConcreteScenario& scenario,
                                 const SafetyGroupRegistry& registry);

}  // namespace cat::scenario
