#include "cat/scoring/ztest.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cat/errors.hpp"

namespace cat::scoring {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

std::optional<double> pooled_two_proportion_z(int x1, int n1, int x2, int n2) {
    if (n1 < 2 || n2 < 2) return std::nullopt;
    const double pooled = static_cast<double>(x1 + x2) / static_cast<double>(n1 + n2);
    if (pooled <= 0.0 || pooled >= 1.0) return std::nullopt;
    const double p1 = static_cast<double>(x1) / n1;
    const double p2 = static_cast<double>(x2) / n2;
    const double se = std::sqrt(pooled * (1.0 - pooled) * (1.0 / n1 + 1.0 / n2));
    return (p2 - p1) / se;
}

DiscriminabilityReport discriminability_ztest(
    std::span<const scenario::ConcreteScenario> database,
    const scenario::SafetyGroupRegistry& registry, const NieonModels& models,
    const nieon::ManeuverLimits& limits, const severity::SeverityConfig& severity_config,
    const std::vector<double>& deltas, double alpha, const nieon::NieonEvalOptions& options) {
    if (deltas.size() < 2) {
        throw ConfigError("discriminability needs at least two stringency levels");
    }

    std::vector<double> sorted = deltas;
    std::sort(sorted.begin(), sorted.end());
    const std::vector<double> extremes{sorted.front(), sorted.back()};

    struct Counts {
        int n = 0;
        int fail_low = 0;
        int fail_high = 0;
    };
    std::map<std::string, Counts> by_group;

    for (const scenario::ConcreteScenario& s : database) {
        const scenario::SafetyGroup* group = registry.find(s.safety_group);
        if (group == nullptr) {
            throw UnmappedConflict("scenario '" + s.id + "' references unregistered group '" +
                                   s.safety_group + "'");
        }
        const nieon::ResponseTimeModel& base =
            group->road_user_group == scenario::RoadUserGroup::Vehicle ? models.vehicle
                                                                       : models.vru;
        Counts& counts = by_group[s.safety_group];
        counts.n += 1;
        for (std::size_t level = 0; level < extremes.size(); ++level) {
            nieon::ResponseTimeModel variant = base;
            variant.intercept += extremes[level];
            if (variant.intercept <= 0.0) {
                throw NonPositiveIntercept("stringency delta " + std::to_string(extremes[level]) +
                                           " drives the intercept non-positive");
            }
            const nieon::NieonOutcome outcome =
                nieon::evaluate_nieon(s, variant, limits, severity_config, options);
            // Failure under the collision metric: frontal, non-stationary contact.
            const bool fails = outcome.outcome.contact &&
                               outcome.outcome.contact->ego_zone == sim::ImpactZone::Frontal &&
                               !outcome.outcome.contact->ego_stationary;
            if (fails) (level == 0 ? counts.fail_low : counts.fail_high) += 1;
        }
    }

    DiscriminabilityReport report;
    report.alpha = alpha;
    report.deltas = sorted;
    for (const auto& [group_id, counts] : by_group) {
        GroupDiscriminability g;
        g.group_id = group_id;
        g.n = counts.n;
        g.p_low = counts.n > 0 ? static_cast<double>(counts.fail_low) / counts.n : 0.0;
        g.p_high = counts.n > 0 ? static_cast<double>(counts.fail_high) / counts.n : 0.0;
        const auto z = pooled_two_proportion_z(counts.fail_low, counts.n, counts.fail_high, counts.n);
        if (!z) {
            g.degenerate = true;
            g.discriminative = false;
            g.note = "degenerate proportions; collect additional scenarios";
        } else {
            g.z = *z;
            g.p_value = 2.0 * (1.0 - normal_cdf(std::abs(*z)));
            g.discriminative = g.p_value < alpha;
            if (!g.discriminative) g.note = "collect additional scenarios";
        }
        report.groups.push_back(std::move(g));
    }
    return report;
}

}  // namespace cat::scoring
