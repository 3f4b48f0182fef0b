// cat-harness: scenario-based collision-avoidance evaluation against a
// non-impaired, eyes-on-conflict reference driver.
//
// Subcommands mirror the evaluation process stages:
//   validate       structural checks on a scenario database
//   generate       .scn sources -> concrete scenario database
//   run            full evaluation of a policy (acceptance verdict)
//   ztest          reference-driver discriminability diagnostic
//   repeat         repeatability analysis across seeded runs
//   diff           release comparison or ODD coverage diff
//   track-compare  sim-vs-track verification criteria
//   report         re-emit artifacts from a stored report

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cat/errors.hpp"
#include "cat/harness/config.hpp"
#include "cat/harness/database.hpp"
#include "cat/harness/policies.hpp"
#include "cat/harness/report.hpp"
#include "cat/harness/runner.hpp"
#include "cat/lang/feasibility.hpp"
#include "cat/lang/instantiate.hpp"
#include "cat/lang/odd.hpp"
#include "cat/lang/parser.hpp"
#include "cat/scenario/json_io.hpp"
#include "cat/sim/engine.hpp"

namespace fs = std::filesystem;
using namespace cat;

namespace {

harness::HarnessConfig load_config(const std::string& path) {
    if (path.empty()) return harness::HarnessConfig{};
    return harness::HarnessConfig::load(path);
}

scenario::SafetyGroupRegistry load_registry(const std::string& groups_path,
                                            const fs::path& db_root) {
    if (!groups_path.empty()) return scenario::SafetyGroupRegistry::from_json_file(groups_path);
    const fs::path bundled = db_root / "safety_groups.json";
    if (fs::exists(bundled)) return scenario::SafetyGroupRegistry::from_json_file(bundled);
    throw ConfigError("no safety group registry: pass --groups or place safety_groups.json in the "
                      "database root");
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

scoring::PositionTrace trace_to_positions(const scenario::ConcreteScenario& s,
                                          const sim::SimTrace& trace) {
    scoring::PositionTrace p;
    p.scenario_id = s.id;
    p.collided = trace.first_contact.has_value();
    double arc = 0.0;
    for (std::size_t k = 0; k < trace.ego.size(); ++k) {
        if (k > 0) {
            arc += geom::distance({trace.ego[k - 1].x, trace.ego[k - 1].y},
                                  {trace.ego[k].x, trace.ego[k].y});
        }
        p.arc.emplace_back(trace.time_at(k) - s.stimulus.onset_time, arc);
    }
    return p;
}

std::vector<scoring::PositionTrace> load_track_records(const fs::path& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw IoFailure("cannot open track records: " + csv_path.string());
    std::vector<scoring::PositionTrace> out;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        const auto cols = split_csv_line(line);
        if (cols.size() != 3) {
            throw IoFailure("track records row needs scenario_id,collided,trajectory_file: " + line);
        }
        scoring::PositionTrace record;
        record.scenario_id = cols[0];
        record.collided = cols[1] == "true" || cols[1] == "1";
        const fs::path traj = csv_path.parent_path() / cols[2];
        std::ifstream tin(traj);
        if (!tin) throw IoFailure("cannot open track trajectory: " + traj.string());
        std::string trow;
        bool theader = true;
        double arc = 0.0;
        double px = 0.0, py = 0.0;
        bool first = true;
        while (std::getline(tin, trow)) {
            if (trow.empty()) continue;
            if (theader) {
                theader = false;
                continue;
            }
            const auto tc = split_csv_line(trow);
            if (tc.size() != 3) throw IoFailure("track trajectory row needs t,x,y: " + trow);
            const double t = std::stod(tc[0]);
            const double x = std::stod(tc[1]);
            const double y = std::stod(tc[2]);
            if (!first) arc += geom::distance({px, py}, {x, y});
            first = false;
            px = x;
            py = y;
            record.arc.emplace_back(t, arc);
        }
        out.push_back(std::move(record));
    }
    return out;
}

void write_text(const fs::path& path, const std::string& content) {
    if (!path.parent_path().empty()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot write " + path.string());
    out << content;
}

int cmd_validate(const std::string& db_path, const std::string& groups_path) {
    const harness::ScenarioDatabase db = harness::load_database(db_path);
    const auto registry = load_registry(groups_path, db.root);
    const scenario::ValidationReport report = harness::validate_database(db, registry);
    if (!report.ok()) {
        std::cerr << report.summary();
        std::cerr << report.violations.size() << " violation(s) in " << db_path << "\n";
        return harness::kExitDatabaseInvalid;
    }
    std::cout << "database ok: " << db.scenarios.size() << " scenarios, hash " << db.content_hash
              << "\n";
    return harness::kExitOk;
}

int cmd_generate(const std::vector<std::string>& sources, const std::string& out_dir,
                 const std::string& groups_path, const std::string& mode, int samples,
                 std::uint64_t seed) {
    const auto registry = scenario::SafetyGroupRegistry::from_json_file(groups_path);
    const auto vocab = lang::VocabRegistry::bundled();
    const auto layouts = lang::LayoutLibrary::bundled();
    const auto rules = lang::FeasibilityRules::bundled();

    lang::SamplingPlan plan;
    plan.mode = mode == "lhs" ? lang::SamplingPlan::Mode::LatinHypercube
                              : lang::SamplingPlan::Mode::Grid;
    plan.samples = samples;
    plan.seed = seed;

    harness::ScenarioDatabase db;
    db.root = out_dir;
    for (const std::string& src : sources) {
        for (const lang::ParsedScenario& parsed : lang::parse_scn_file(src, vocab)) {
            const auto decision = lang::filter_conflict_feasible(
                parsed.functional(), rules,
                [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; });
            if (!decision.feasible) {
                std::cerr << "warning: scenario '" << parsed.functional().id
                          << "' is conflict-infeasible under the rule table; generating anyway\n";
            }
            lang::InstantiateOptions options;
            options.test_request = "tr_" + parsed.functional().id;
            const auto concretes =
                lang::instantiate_concrete(parsed.logical, plan, layouts, registry, options);
            harness::TestRequest tr;
            tr.id = options.test_request;
            tr.parent_safety_group = concretes.empty() ? "" : concretes.front().safety_group;
            tr.specification = lang::serialize_functional(parsed.logical);
            tr.author = "generator";
            tr.status = "approved";
            db.test_requests[tr.id] = std::move(tr);
            db.scenarios.insert(db.scenarios.end(), concretes.begin(), concretes.end());
        }
    }
    std::sort(db.scenarios.begin(), db.scenarios.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    harness::write_database(db, out_dir);
    fs::copy_file(groups_path, fs::path(out_dir) / "safety_groups.json",
                  fs::copy_options::overwrite_existing);
    std::cout << "generated " << db.scenarios.size() << " concrete scenarios into " << out_dir
              << "\n";
    return harness::kExitOk;
}

int cmd_run(harness::HarnessConfig config, const std::string& db_path,
            const std::string& groups_path, const std::string& policy, const std::string& out_dir,
            std::uint64_t seed, int parallelism, const std::vector<std::string>& format_tokens,
            const std::string& dump_traces) {
    const harness::ScenarioDatabase db = harness::load_database(db_path);
    const auto registry = load_registry(groups_path, db.root);
    const scenario::ValidationReport validation = harness::validate_database(db, registry);
    if (!validation.ok()) {
        std::cerr << validation.summary();
        return harness::kExitDatabaseInvalid;
    }
    if (!policy.empty()) config.policy = policy;

    harness::TraceSink sink;
    if (!dump_traces.empty()) {
        fs::create_directories(dump_traces);
        sink = [&dump_traces](const scenario::ConcreteScenario& s, const sim::SimTrace& trace) {
            std::ofstream out(fs::path(dump_traces) / (s.id + ".csv"));
            sim::write_trace_csv(trace, s, out);
        };
    }

    const harness::EvaluationReport report = harness::run_evaluation(
        config, db, registry, config.policy, seed, parallelism, sink);

    std::vector<harness::ReportFormat> formats;
    for (const std::string& token : format_tokens) {
        formats.push_back(harness::report_format_from_token(token));
    }
    if (!out_dir.empty() && !formats.empty()) {
        for (const fs::path& file : harness::emit_report(report, out_dir, formats)) {
            std::cout << "wrote " << file.string() << "\n";
        }
    }

    std::cout << harness::scores_csv(report);
    std::cout << "policy=" << report.policy << " scenarios=" << report.n_scenarios
              << " inconclusive=" << report.inconclusive.size() << " wall_ms=" << report.wall_ms
              << "\n";
    for (const std::string& id : report.inconclusive) {
        std::cerr << "inconclusive (policy fault): " << id << "\n";
    }
    std::cout << "acceptance: " << (report.acceptance.overall_pass ? "PASS" : "FAIL") << "\n";
    return report.acceptance.overall_pass ? harness::kExitOk : harness::kExitAcceptanceFailed;
}

int cmd_ztest(const harness::HarnessConfig& config, const std::string& db_path,
              const std::string& groups_path, const std::string& out_dir) {
    const harness::ScenarioDatabase db = harness::load_database(db_path);
    const auto registry = load_registry(groups_path, db.root);

    nieon::NieonEvalOptions options;
    options.step = config.sim_step;
    options.swerve_includes_braking = config.swerve_includes_braking;
    options.sim_limits = config.sim_limits;

    const scoring::DiscriminabilityReport report = scoring::discriminability_ztest(
        db.scenarios, registry, {config.nieon_vehicle, config.nieon_vru}, config.maneuver_limits,
        config.severity, config.ztest_deltas, config.ztest_alpha, options);

    for (const scoring::GroupDiscriminability& g : report.groups) {
        std::cout << g.group_id << ": n=" << g.n << " p_low=" << g.p_low << " p_high=" << g.p_high
                  << " z=" << g.z << " p=" << g.p_value
                  << (g.degenerate ? " [degenerate]" : (g.discriminative ? " [discriminative]" : ""))
                  << (g.note.empty() ? "" : " -> " + g.note) << "\n";
    }
    if (!out_dir.empty()) {
        write_text(fs::path(out_dir) / "ztest.json", harness::discriminability_json(report));
    }
    return harness::kExitOk;
}

int cmd_repeat(const harness::HarnessConfig& config, const std::string& db_path,
               const std::string& groups_path, const std::string& policy, int k,
               std::uint64_t seed, const std::string& out_dir) {
    const harness::ScenarioDatabase db = harness::load_database(db_path);
    const auto registry = load_registry(groups_path, db.root);
    harness::HarnessConfig run_config = config;
    if (!policy.empty()) run_config.policy = policy;

    std::vector<std::uint64_t> seeds;
    for (int i = 0; i < k; ++i) seeds.push_back(seed + static_cast<std::uint64_t>(i));

    const auto run = [&](std::uint64_t run_seed) {
        harness::HarnessConfig c = run_config;
        c.jitter_seed = run_seed;
        return harness::run_evaluation(c, db, registry, c.policy, run_seed).aggregate;
    };
    const scoring::RepeatabilityReport report = scoring::repeatability_analysis(run, k, seeds);

    std::cout << "runs=" << report.runs << " jitter=" << (config.jitter_enabled ? "on" : "off")
              << "\n";
    std::cout << "p95 |percent change|: collisions=" << report.overall_p95_collision_pct
              << "% serious=" << report.overall_p95_injury_pct << "%\n";
    std::cout << "reference context (not a target): 1.5% collisions / 0.6% serious\n";
    if (!out_dir.empty()) {
        write_text(fs::path(out_dir) / "repeatability.json",
                   harness::repeatability_json(report, config.jitter_enabled));
    }
    return harness::kExitOk;
}

int cmd_diff_reports(const std::string& report_a, const std::string& report_b,
                     const std::string& out_dir) {
    const scoring::ReleaseSnapshot a = harness::snapshot_from_report_json(read_file(report_a));
    const scoring::ReleaseSnapshot b = harness::snapshot_from_report_json(read_file(report_b));
    const scoring::ReleaseDiff diff = scoring::release_diff(a, b);
    for (const scoring::ReleaseDiff::Row& row : diff.rows) {
        std::cout << row.group_id << ": d_ads_collisions=" << row.d_ads_collisions
                  << " d_ads_serious=" << row.d_ads_serious
                  << (row.regression ? " [regression]" : "") << "\n";
    }
    if (!out_dir.empty()) {
        write_text(fs::path(out_dir) / "release_diff.json", harness::release_diff_json(diff));
    }
    return harness::kExitOk;
}

int cmd_diff_odd(const std::string& db_path, const std::string& old_odd_path,
                 const std::string& new_odd_path, const std::string& out_dir) {
    const harness::ScenarioDatabase db = harness::load_database(db_path);
    const auto vocab_registry = lang::VocabRegistry::bundled();
    const lang::OddProfile old_odd = lang::odd_profile_from_json_file(old_odd_path, vocab_registry);
    const lang::OddProfile new_odd = lang::odd_profile_from_json_file(new_odd_path, vocab_registry);
    const lang::EnumerationVocab vocab = lang::EnumerationVocab::bundled(vocab_registry);
    const lang::CoverageDiff diff =
        lang::diff_odd_coverage(db.scenarios, old_odd, new_odd, vocab);
    std::cout << "carried_over=" << diff.carried_over.size() << " excluded=" << diff.excluded.size()
              << " gap_categories=" << diff.gap_categories.size() << "\n";
    if (!out_dir.empty()) {
        write_text(fs::path(out_dir) / "coverage_diff.json", lang::coverage_diff_to_json(diff));
    }
    return harness::kExitOk;
}

int cmd_track_compare(const harness::HarnessConfig& config, const std::string& db_path,
                      const std::string& groups_path, const std::string& policy,
                      const std::string& track_csv, std::uint64_t seed,
                      const std::string& out_dir) {
    const harness::ScenarioDatabase db = harness::load_database(db_path);
    const auto registry = load_registry(groups_path, db.root);
    harness::HarnessConfig run_config = config;
    if (!policy.empty()) run_config.policy = policy;

    std::vector<scoring::PositionTrace> sim_traces;
    const harness::TraceSink sink = [&](const scenario::ConcreteScenario& s,
                                        const sim::SimTrace& trace) {
        sim_traces.push_back(trace_to_positions(s, trace));
    };
    harness::run_evaluation(run_config, db, registry, run_config.policy, seed, 0, sink);

    const std::vector<scoring::PositionTrace> track = load_track_records(track_csv);
    const scoring::TrackComparison comparison = scoring::track_comparison(sim_traces, track);
    std::cout << "matched=" << comparison.matched << " sim_collisions=" << comparison.sim_collisions
              << " track_collisions=" << comparison.track_collisions << "\n";
    std::cout << "conservative=" << (comparison.conservative ? "yes" : "no")
              << " ahead_fraction=" << comparison.ahead_fraction
              << " trajectories_ahead=" << (comparison.trajectories_ahead ? "yes" : "no") << "\n";
    if (!out_dir.empty()) {
        write_text(fs::path(out_dir) / "track_comparison.json",
                   harness::track_comparison_json(comparison));
    }
    return harness::kExitOk;
}

int cmd_report(const std::string& in_path, const std::string& out_dir,
               const std::vector<std::string>& format_tokens) {
    // Rebuild the aggregate view of a stored report and re-emit artifacts.
    const scoring::ReleaseSnapshot snap = harness::snapshot_from_report_json(read_file(in_path));
    harness::EvaluationReport report;
    report.aggregate = snap.aggregate;
    report.database_hash = snap.database_hash;
    report.acceptance = scoring::acceptance_check(report.aggregate);
    std::vector<harness::ReportFormat> formats;
    for (const std::string& token : format_tokens) {
        const harness::ReportFormat f = harness::report_format_from_token(token);
        if (f == harness::ReportFormat::Json) {
            throw ConfigError("report re-emission supports csv and svg only");
        }
        formats.push_back(f);
    }
    for (const fs::path& file : harness::emit_report(report, out_dir, formats)) {
        std::cout << "wrote " << file.string() << "\n";
    }
    return harness::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scenario-based collision-avoidance evaluation harness"};
    app.require_subcommand(1);

    std::string config_path;
    std::string db_path;
    std::string groups_path;
    std::string policy;
    std::string out_dir;
    std::uint64_t seed = 1;
    int parallelism = 0;
    std::vector<std::string> formats;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "harness config file");
        cmd->add_option("--db", db_path, "scenario database directory");
        cmd->add_option("--groups", groups_path, "safety group registry json");
        cmd->add_option("--policy", policy, "policy name");
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--seed", seed, "evaluation seed");
        cmd->add_option("--parallelism", parallelism, "worker count (0: config/env)");
        cmd->add_option("--format", formats, "report format: csv|json|svg (repeatable)");
    };

    CLI::App* validate = app.add_subcommand("validate", "validate a scenario database");
    add_common(validate);

    CLI::App* generate = app.add_subcommand("generate", "instantiate .scn sources");
    std::vector<std::string> scn_sources;
    std::string sample_mode = "grid";
    int samples = 0;
    generate->add_option("--scn", scn_sources, "scenario DSL source file(s)")->required();
    generate->add_option("--mode", sample_mode, "grid|lhs")
        ->check(CLI::IsMember({"grid", "lhs"}));
    generate->add_option("--samples", samples, "latin hypercube sample count");
    add_common(generate);

    CLI::App* run = app.add_subcommand("run", "evaluate a policy against the database");
    std::string dump_traces;
    run->add_option("--dump-traces", dump_traces, "write per-scenario trace CSVs here");
    add_common(run);

    CLI::App* ztest = app.add_subcommand("ztest", "reference-driver discriminability diagnostic");
    add_common(ztest);

    CLI::App* repeat = app.add_subcommand("repeat", "repeatability analysis");
    int repeat_k = 10;
    repeat->add_option("-k,--runs", repeat_k, "number of repeated evaluations");
    add_common(repeat);

    CLI::App* diff = app.add_subcommand("diff", "release comparison or ODD coverage diff");
    std::string report_a, report_b, old_odd, new_odd;
    diff->add_option("--report-a", report_a, "baseline report.json");
    diff->add_option("--report-b", report_b, "candidate report.json");
    diff->add_option("--old-odd", old_odd, "previous ODD profile json");
    diff->add_option("--new-odd", new_odd, "new ODD profile json");
    add_common(diff);

    CLI::App* track = app.add_subcommand("track-compare", "sim-vs-track verification criteria");
    std::string track_csv;
    track->add_option("--track", track_csv, "track records csv")->required();
    add_common(track);

    CLI::App* report_cmd = app.add_subcommand("report", "re-emit artifacts from a stored report");
    std::string report_in;
    report_cmd->add_option("--in", report_in, "stored report.json")->required();
    add_common(report_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(db_path, groups_path);
        if (generate->parsed()) {
            if (groups_path.empty()) throw ConfigError("generate requires --groups");
            if (out_dir.empty()) throw ConfigError("generate requires --out");
            return cmd_generate(scn_sources, out_dir, groups_path, sample_mode, samples, seed);
        }
        if (run->parsed()) {
            return cmd_run(load_config(config_path), db_path, groups_path, policy, out_dir, seed,
                           parallelism, formats, dump_traces);
        }
        if (ztest->parsed()) {
            return cmd_ztest(load_config(config_path), db_path, groups_path, out_dir);
        }
        if (repeat->parsed()) {
            return cmd_repeat(load_config(config_path), db_path, groups_path, policy, repeat_k,
                              seed, out_dir);
        }
        if (diff->parsed()) {
            if (!report_a.empty() && !report_b.empty()) {
                return cmd_diff_reports(report_a, report_b, out_dir);
            }
            if (!old_odd.empty() && !new_odd.empty()) {
                return cmd_diff_odd(db_path, old_odd, new_odd, out_dir);
            }
            throw ConfigError("diff needs --report-a/--report-b or --old-odd/--new-odd");
        }
        if (track->parsed()) {
            return cmd_track_compare(load_config(config_path), db_path, groups_path, policy,
                                     track_csv, seed, out_dir);
        }
        if (report_cmd->parsed()) return cmd_report(report_in, out_dir, formats);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return harness::kExitConfigError;
    } catch (const IoFailure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return harness::kExitFault;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return harness::kExitFault;
    }
    return harness::kExitOk;
}
