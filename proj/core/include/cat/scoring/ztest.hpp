#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cat/nieon/evaluate.hpp"
#include "cat/scenario/safety_groups.hpp"

namespace cat::scoring {

/// Standard normal CDF (erfc-based, double precision).
double normal_cdf(double x);

/// Pooled two-proportion z statistic for x1/n1 vs x2/n2 failures:
/// z = (p2 - p1) / sqrt(p_hat (1 - p_hat) (1/n1 + 1/n2)).
/// Returns nullopt when degenerate (n < 2 or pooled proportion in {0, 1}).
std::optional<double> pooled_two_proportion_z(int x1, int n1, int x2, int n2);

struct GroupDiscriminability {
    std::string group_id;
    int n = 0;
    double p_low = 0.0;   // failure rate at the least stringent extreme
    double p_high = 0.0;  // failure rate at the most stringent extreme
    double z = 0.0;
    double p_value = 1.0;
    bool discriminative = false;
    bool degenerate = false;
    std::string note;  // "collect additional scenarios" flag when not discriminative
};

struct DiscriminabilityReport {
    std::vector<GroupDiscriminability> groups;
    double alpha = 0.05;
    std::vector<double> deltas;
};

struct NieonModels {
    nieon::ResponseTimeModel vehicle;
    nieon::ResponseTimeModel vru;
};

/// Evaluates the reference driver at the extreme stringency variants over
/// every safety group of the database and tests whether the collision-metric
/// failure rates differ. Non-discriminative groups are flagged for
/// additional scenario collection; degenerate groups never raise.
DiscriminabilityReport discriminability_ztest(
    std::span<const scenario::ConcreteScenario> database,
    const scenario::SafetyGroupRegistry& registry, const NieonModels& models,
    const nieon::ManeuverLimits& limits, const severity::SeverityConfig& severity_config,
    const std::vector<double>& deltas, double alpha,
    const nieon::NieonEvalOptions& options = {});

}  // namespace cat::scoring
