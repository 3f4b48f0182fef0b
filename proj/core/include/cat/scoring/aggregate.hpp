#pragma once

#include <span>
#include <string>
#include <vector>

#include "cat/scoring/metrics.hpp"

namespace cat::scoring {

struct GroupScore {
    std::string group_id;
    scenario::RoadUserGroup road_user_group = scenario::RoadUserGroup::Vehicle;
    int n_scenarios = 0;
    int ads_collisions = 0;
    int nieon_collisions = 0;
    int ads_serious = 0;
    int nieon_serious = 0;
};

struct Aggregate {
    std::vector<GroupScore> groups;  // sorted by group id
    GroupScore vehicle_rollup;
    GroupScore vru_rollup;
};

/// Sums both metric predicates per party within safety groups and rolls the
/// groups up into the two road-user groups. Inconclusive results are skipped.
Aggregate aggregate_groups(std::span<const ScenarioResult> results);

struct GroupVerdict {
    std::string group_id;
    bool collision_pass = true;
    bool injury_pass = true;
    bool pass = true;
};

struct AcceptanceReport {
    std::vector<GroupVerdict> group_verdicts;
    GroupVerdict vehicle_verdict;
    GroupVerdict vru_verdict;
    bool overall_pass = true;
    int slack = 0;
};

/// A group passes when the ADS counts do not exceed the reference counts on
/// either metric (plus an optional absolute slack, default 0); overall pass
/// requires every safety group and both road-user groups to pass.
AcceptanceReport acceptance_check(const Aggregate& aggregate, int slack = 0);

}  // namespace cat::scoring
