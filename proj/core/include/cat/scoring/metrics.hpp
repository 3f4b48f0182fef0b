#pragma once

#include <string>

#include "cat/nieon/evaluate.hpp"
#include "cat/severity/assess.hpp"

namespace cat::scoring {

enum class Party { Ads, Nieon };

struct ScenarioResult {
    std::string scenario_id;
    std::string test_request;
    severity::PartyOutcome ads;
    nieon::NieonOutcome nieon;
    std::string safety_group;
    scenario::RoadUserGroup road_user_group = scenario::RoadUserGroup::Vehicle;
    bool inconclusive = false;  // policy fault; surfaced, never scored
    std::string fault;
};

/// Collision metric: contact AND frontal impact zone AND ego moving. The
/// rear-2/3 and stationary exclusions apply identically to both parties.
bool collision_metric_counts(const ScenarioResult& result, Party party);

/// Serious-injury metric: any involved actor at or above its class
/// threshold. No zone or stationary exclusions.
bool injury_metric_counts(const ScenarioResult& result, Party party);

}  // namespace cat::scoring
