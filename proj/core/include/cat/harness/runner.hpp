#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cat/harness/config.hpp"
#include "cat/harness/database.hpp"
#include "cat/scoring/aggregate.hpp"
#include "cat/scoring/metrics.hpp"

namespace cat::harness {

struct EvaluationReport {
    std::map<std::string, std::string> config_echo;
    std::string database_path;
    std::string database_hash;
    std::string policy;
    std::uint64_t seed = 0;
    std::vector<scoring::ScenarioResult> results;  // sorted by scenario id
    scoring::Aggregate aggregate;
    scoring::AcceptanceReport acceptance;
    std::vector<std::string> inconclusive;  // policy-fault scenario ids, surfaced
    int n_scenarios = 0;
    double wall_ms = 0.0;
};

/// Optional trace consumer, invoked for every ADS simulation (after the
/// deterministic sort, in scenario-id order).
using TraceSink = std::function<void(const scenario::ConcreteScenario&, const sim::SimTrace&)>;

/// Evaluates every scenario: ADS policy simulation with latency injection,
/// reference-driver best-of-three, severity for both, aggregation, and the
/// acceptance check. Deterministic for a fixed (config, database, policy,
/// seed); the worker pool shares nothing and results merge in id order.
EvaluationReport run_evaluation(const HarnessConfig& config, const ScenarioDatabase& db,
                                const scenario::SafetyGroupRegistry& registry,
                                std::string_view policy_name, std::uint64_t seed,
                                int parallelism = 0,  // 0: use config/environment
                                const TraceSink& trace_sink = {});

/// Process exit codes for the CLI surface.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAcceptanceFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitDatabaseInvalid = 3;
inline constexpr int kExitFault = 4;

}  // namespace cat::harness
