#include "cat/scoring/aggregate.hpp"

#include <algorithm>
#include <map>

namespace cat::scoring {

Aggregate aggregate_groups(std::span<const ScenarioResult> results) {
    std::map<std::string, GroupScore> by_group;
    for (const ScenarioResult& r : results) {
        if (r.inconclusive) continue;
        GroupScore& g = by_group[r.safety_group];
        if (g.group_id.empty()) {
            g.group_id = r.safety_group;
            g.road_user_group = r.road_user_group;
        }
        g.n_scenarios += 1;
        g.ads_collisions += collision_metric_counts(r, Party::Ads) ? 1 : 0;
        g.nieon_collisions += collision_metric_counts(r, Party::Nieon) ? 1 : 0;
        g.ads_serious += injury_metric_counts(r, Party::Ads) ? 1 : 0;
        g.nieon_serious += injury_metric_counts(r, Party::Nieon) ? 1 : 0;
    }

    Aggregate out;
    out.vehicle_rollup.group_id = "vehicle_total";
    out.vehicle_rollup.road_user_group = scenario::RoadUserGroup::Vehicle;
    out.vru_rollup.group_id = "vru_total";
    out.vru_rollup.road_user_group = scenario::RoadUserGroup::Vru;
    for (auto& [id, score] : by_group) {
        GroupScore& roll = score.road_user_group == scenario::RoadUserGroup::Vehicle
                               ? out.vehicle_rollup
                               : out.vru_rollup;
        roll.n_scenarios += score.n_scenarios;
        roll.ads_collisions += score.ads_collisions;
        roll.nieon_collisions += score.nieon_collisions;
        roll.ads_serious += score.ads_serious;
        roll.nieon_serious += score.nieon_serious;
        out.groups.push_back(score);
    }
    return out;
}

namespace {

GroupVerdict verdict_of(const GroupScore& score, int slack) {
    GroupVerdict v;
    v.group_id = score.group_id;
    v.collision_pass = score.ads_collisions <= score.nieon_collisions + slack;
    v.injury_pass = score.ads_serious <= score.nieon_serious + slack;
    v.pass = v.collision_pass && v.injury_pass;
    return v;
}

}  // namespace

AcceptanceReport acceptance_check(const Aggregate& aggregate, int slack) {
    AcceptanceReport report;
    report.slack = slack;
    for (const GroupScore& g : aggregate.groups) {
        report.group_verdicts.push_back(verdict_of(g, slack));
        report.overall_pass = report.overall_pass && report.group_verdicts.back().pass;
    }
    report.vehicle_verdict = verdict_of(aggregate.vehicle_rollup, slack);
    report.vru_verdict = verdict_of(aggregate.vru_rollup, slack);
    report.overall_pass =
        report.overall_pass && report.vehicle_verdict.pass && report.vru_verdict.pass;
    return report;
}

}  // namespace cat::scoring
