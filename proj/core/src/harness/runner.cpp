#include "cat/harness/runner.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "cat/errors.hpp"
#include "cat/harness/policies.hpp"
#include "cat/nieon/evaluate.hpp"
#include "cat/severity/assess.hpp"

namespace cat::harness {

namespace {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    return z ^ (z >> 31);
}

}  // namespace

EvaluationReport run_evaluation(const HarnessConfig& config, const ScenarioDatabase& db,
                                const scenario::SafetyGroupRegistry& registry,
                                std::string_view policy_name, std::uint64_t seed,
                                int parallelism, const TraceSink& trace_sink) {
    const auto t0 = std::chrono::steady_clock::now();
    config.validate();

    const bool reference_policy = is_reference_policy(policy_name);
    if (!reference_policy) {
        make_policy(policy_name, config);  // fail fast on unknown policies
    }

    const int workers =
        std::max(1, parallelism > 0 ? parallelism : effective_parallelism(config));

    nieon::NieonEvalOptions nieon_options;
    nieon_options.step = config.sim_step;
    nieon_options.swerve_includes_braking = config.swerve_includes_braking;
    nieon_options.sim_limits = config.sim_limits;

    const std::size_t n = db.scenarios.size();
    std::vector<scoring::ScenarioResult> results(n);
    std::vector<sim::SimTrace> traces;
    if (trace_sink) traces.resize(n);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    const auto worker = [&]() {
        // Each worker owns its policy instance; scenarios share nothing.
        std::unique_ptr<sim::EgoPolicy> policy;
        if (!reference_policy) policy = make_policy(policy_name, config);
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load()) break;
            const scenario::ConcreteScenario& s = db.scenarios[i];
            try {
                scoring::ScenarioResult r;
                r.scenario_id = s.id;
                r.test_request = s.test_request;
                r.safety_group = s.safety_group;
                r.road_user_group = scenario::road_user_group_of(s, registry);

                const nieon::ResponseTimeModel& rt_model =
                    r.road_user_group == scenario::RoadUserGroup::Vehicle ? config.nieon_vehicle
                                                                          : config.nieon_vru;
                r.nieon = nieon::evaluate_nieon(s, rt_model, config.maneuver_limits,
                                                config.severity, nieon_options);

                if (reference_policy) {
                    // Sanity baseline: the reference driver evaluated a second
                    // time through the same path; ties must be exact.
                    const nieon::NieonOutcome again = nieon::evaluate_nieon(
                        s, rt_model, config.maneuver_limits, config.severity, nieon_options);
                    r.ads = again.outcome;
                } else {
                    const std::uint64_t scenario_seed = mix(seed, fnv1a64(s.id));
                    sim::JitterConfig jitter;
                    jitter.enabled = config.jitter_enabled;
                    jitter.seed = mix(config.jitter_seed, scenario_seed);
                    const sim::SimTrace trace =
                        sim::run_scenario(s, *policy, config.latency, config.sim_step,
                                          scenario_seed, config.sim_limits, jitter);
                    if (!trace.valid) {
                        r.inconclusive = true;
                        r.fault = trace.fault;
                    } else {
                        r.ads = severity::assess_outcome(s, trace, config.severity);
                    }
                    if (trace_sink) traces[i] = trace;
                }
                results[i] = std::move(r);
            } catch (const std::exception& e) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                failed.store(true);
                if (failure.empty()) failure = "scenario '" + s.id + "': " + e.what();
            }
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failed.load()) throw Error(failure);

    if (trace_sink) {
        for (std::size_t i = 0; i < n; ++i) trace_sink(db.scenarios[i], traces[i]);
    }

    EvaluationReport report;
    report.config_echo = config.echo();
    report.database_path = db.root.string();
    report.database_hash = db.content_hash;
    report.policy = std::string(policy_name);
    report.seed = seed;
    report.n_scenarios = static_cast<int>(n);
    for (const scoring::ScenarioResult& r : results) {
        if (r.inconclusive) report.inconclusive.push_back(r.scenario_id);
    }
    report.aggregate = scoring::aggregate_groups(results);
    report.acceptance = scoring::acceptance_check(report.aggregate, config.acceptance_slack);
    report.results = std::move(results);

    const auto t1 = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

}  // namespace cat::harness
