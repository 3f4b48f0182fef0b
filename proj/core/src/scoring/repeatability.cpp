#include "cat/scoring/repeatability.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cat/errors.hpp"

namespace cat::scoring {

double empirical_percentile(std::vector<double> values, double q) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t rank = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(values.size())));
    return values[std::min(values.size() - 1, rank == 0 ? 0 : rank - 1)];
}

RepeatabilityReport repeatability_analysis(
    const std::function<Aggregate(std::uint64_t seed)>& run, int k,
    std::span<const std::uint64_t> seeds) {
    if (k < 2) throw ConfigError("repeatability analysis needs k >= 2 runs");
    if (static_cast<int>(seeds.size()) < k) {
        throw ConfigError("repeatability analysis needs one seed per run");
    }

    std::vector<Aggregate> aggregates;
    aggregates.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) aggregates.push_back(run(seeds[static_cast<std::size_t>(i)]));

    const Aggregate& base = aggregates.front();
    std::map<std::string, GroupScore> base_by_id;
    for (const GroupScore& g : base.groups) base_by_id[g.group_id] = g;

    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> changes;
    for (int i = 1; i < k; ++i) {
        for (const GroupScore& g : aggregates[static_cast<std::size_t>(i)].groups) {
            const auto it = base_by_id.find(g.group_id);
            if (it == base_by_id.end()) {
                throw DatabaseMismatch("group '" + g.group_id + "' absent from the first run");
            }
            const GroupScore& b = it->second;
            const double n = std::max(1, b.n_scenarios);
            changes[g.group_id].first.push_back(
                100.0 * std::abs(g.ads_collisions - b.ads_collisions) / n);
            changes[g.group_id].second.push_back(
                100.0 * std::abs(g.ads_serious - b.ads_serious) / n);
        }
    }

    RepeatabilityReport report;
    report.runs = k;
    std::vector<double> all_collision;
    std::vector<double> all_injury;
    for (const auto& [group_id, lists] : changes) {
        RepeatabilityReport::GroupRow row;
        row.group_id = group_id;
        row.n_scenarios = base_by_id[group_id].n_scenarios;
        row.p95_collision_pct = empirical_percentile(lists.first, 0.95);
        row.p95_injury_pct = empirical_percentile(lists.second, 0.95);
        report.groups.push_back(std::move(row));
        all_collision.insert(all_collision.end(), lists.first.begin(), lists.first.end());
        all_injury.insert(all_injury.end(), lists.second.begin(), lists.second.end());
    }
    report.overall_p95_collision_pct = empirical_percentile(std::move(all_collision), 0.95);
    report.overall_p95_injury_pct = empirical_percentile(std::move(all_injury), 0.95);
    return report;
}

}  // namespace cat::scoring
