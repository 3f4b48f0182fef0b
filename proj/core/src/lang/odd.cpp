#include "cat/lang/odd.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace cat::lang {

bool scenario_consistent_with(const scenario::ConcreteScenario& scenario, const OddProfile& odd) {
    const scenario::FunctionalSummary& fn = scenario.functional;
    if (!odd.allows_layout(fn.layout_class)) return false;
    if (odd.excludes_ego_maneuver(fn.ego_maneuver, fn.layout_class)) return false;
    for (const scenario::SalientFactor& f : fn.salient_factors) {
        if (odd.present_salient_factors.count(f) == 0) return false;
    }
    return scenario.ego_start.speed <= odd.max_speed_limit + 1e-9;
}

namespace {

struct ComboKey {
    scenario::Maneuver ego;
    scenario::ActorKind kind;
    scenario::Maneuver actor;
    std::string layout;
    std::set<scenario::SalientFactor> salient;

    auto operator<=>(const ComboKey&) const = default;
};

ComboKey key_of(const scenario::FunctionalScenario& fs) {
    return {fs.ego_maneuver.maneuver, fs.actors.front().first, fs.actors.front().second.maneuver,
            fs.layout_class, fs.salient_factors};
}

}  // namespace

CoverageDiff diff_odd_coverage(std::span<const scenario::ConcreteScenario> db,
                               const OddProfile& old_odd, const OddProfile& new_odd,
                               const EnumerationVocab& vocab) {
    CoverageDiff diff;
    std::set<ComboKey> covered;
    for (const scenario::ConcreteScenario& s : db) {
        if (scenario_consistent_with(s, new_odd)) {
            diff.carried_over.push_back(s.id);
            if (!s.functional.actor_maneuvers.empty()) {
                covered.insert({s.functional.ego_maneuver, s.functional.actor_maneuvers[0].first,
                                s.functional.actor_maneuvers[0].second, s.functional.layout_class,
                                s.functional.salient_factors});
            }
        } else {
            diff.excluded.push_back(s.id);
        }
    }
    std::sort(diff.carried_over.begin(), diff.carried_over.end());
    std::sort(diff.excluded.begin(), diff.excluded.end());

    // Gap analysis over the newly applicable part of the combination space:
    // combinations feasible under the new ODD but not the old one.
    std::set<ComboKey> old_combos;
    for (const scenario::FunctionalScenario& fs : enumerate_combinations(vocab, old_odd)) {
        old_combos.insert(key_of(fs));
    }
    for (const scenario::FunctionalScenario& fs : enumerate_combinations(vocab, new_odd)) {
        const ComboKey key = key_of(fs);
        if (old_combos.count(key) > 0) continue;
        if (covered.count(key) > 0) continue;
        diff.gap_categories.push_back({key.ego, key.kind, key.actor, key.layout, key.salient});
    }
    return diff;
}

std::string coverage_diff_to_json(const CoverageDiff& diff) {
    nlohmann::json doc;
    doc["carried_over"] = diff.carried_over;
    doc["excluded"] = diff.excluded;
    doc["gap_categories"] = nlohmann::json::array();
    for (const GapCategory& g : diff.gap_categories) {
        nlohmann::json entry;
        entry["ego_maneuver"] = std::string(scenario::to_token(g.ego_maneuver));
        entry["actor_kind"] = std::string(scenario::to_token(g.actor_kind));
        entry["actor_maneuver"] = std::string(scenario::to_token(g.actor_maneuver));
        entry["layout_class"] = g.layout_class;
        entry["salient_factors"] = g.salient_factors;
        doc["gap_categories"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

}  // namespace cat::lang
