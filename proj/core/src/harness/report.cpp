#include "cat/harness/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cat/errors.hpp"

namespace cat::harness {

namespace {

using nlohmann::json;

json group_to_json(const scoring::GroupScore& g, bool pass) {
    return json{{"group_id", g.group_id},
                {"road_user_group", std::string(scenario::to_token(g.road_user_group))},
                {"n", g.n_scenarios},
                {"ads_collisions", g.ads_collisions},
                {"nieon_collisions", g.nieon_collisions},
                {"ads_serious", g.ads_serious},
                {"nieon_serious", g.nieon_serious},
                {"pass", pass}};
}

scoring::GroupScore group_from_json(const json& j) {
    scoring::GroupScore g;
    g.group_id = j.at("group_id").get<std::string>();
    g.road_user_group =
        scenario::road_user_group_from_token(j.at("road_user_group").get<std::string>());
    g.n_scenarios = j.at("n").get<int>();
    g.ads_collisions = j.at("ads_collisions").get<int>();
    g.nieon_collisions = j.at("nieon_collisions").get<int>();
    g.ads_serious = j.at("ads_serious").get<int>();
    g.nieon_serious = j.at("nieon_serious").get<int>();
    return g;
}

json party_to_json(const severity::PartyOutcome& o) {
    json j;
    j["collided"] = o.collided;
    j["serious_injury"] = o.serious_injury;
    j["max_risk"] = o.max_risk();
    if (o.contact) {
        j["contact"] = {{"time", o.contact->time},
                        {"zone", o.contact->ego_zone == sim::ImpactZone::Frontal
                                     ? "frontal"
                                     : "rear_two_thirds"},
                        {"ego_stationary", o.contact->ego_stationary},
                        {"relative_speed", o.contact->relative_speed_at_impact},
                        {"partner_index", o.contact->partner_index}};
    }
    return j;
}

}  // namespace

ReportFormat report_format_from_token(std::string_view token) {
    if (token == "csv") return ReportFormat::Csv;
    if (token == "json") return ReportFormat::Json;
    if (token == "svg") return ReportFormat::Svg;
    throw ConfigError("unknown report format '" + std::string(token) + "'");
}

std::string scores_csv(const EvaluationReport& report) {
    std::ostringstream os;
    os << "group_id,road_user_group,n,ads_collisions,nieon_collisions,ads_serious,nieon_serious,pass\n";
    const auto row = [&](const scoring::GroupScore& g, bool pass) {
        os << g.group_id << ',' << scenario::to_token(g.road_user_group) << ',' << g.n_scenarios
           << ',' << g.ads_collisions << ',' << g.nieon_collisions << ',' << g.ads_serious << ','
           << g.nieon_serious << ',' << (pass ? "true" : "false") << "\n";
    };
    for (std::size_t i = 0; i < report.aggregate.groups.size(); ++i) {
        row(report.aggregate.groups[i], report.acceptance.group_verdicts[i].pass);
    }
    row(report.aggregate.vehicle_rollup, report.acceptance.vehicle_verdict.pass);
    row(report.aggregate.vru_rollup, report.acceptance.vru_verdict.pass);
    return os.str();
}

std::string report_json(const EvaluationReport& report) {
    json doc;
    doc["config"] = report.config_echo;
    doc["database"] = {{"path", report.database_path},
                       {"content_hash", report.database_hash},
                       {"n_scenarios", report.n_scenarios}};
    doc["policy"] = report.policy;
    doc["seed"] = report.seed;

    doc["groups"] = json::array();
    for (std::size_t i = 0; i < report.aggregate.groups.size(); ++i) {
        doc["groups"].push_back(group_to_json(report.aggregate.groups[i],
                                              report.acceptance.group_verdicts[i].pass));
    }
    doc["rollups"] = json::array();
    doc["rollups"].push_back(
        group_to_json(report.aggregate.vehicle_rollup, report.acceptance.vehicle_verdict.pass));
    doc["rollups"].push_back(
        group_to_json(report.aggregate.vru_rollup, report.acceptance.vru_verdict.pass));

    doc["acceptance"] = {{"overall_pass", report.acceptance.overall_pass},
                         {"slack", report.acceptance.slack}};

    doc["results"] = json::array();
    for (const scoring::ScenarioResult& r : report.results) {
        json row;
        row["id"] = r.scenario_id;
        row["test_request"] = r.test_request;
        row["safety_group"] = r.safety_group;
        row["road_user_group"] = std::string(scenario::to_token(r.road_user_group));
        if (r.inconclusive) {
            row["inconclusive"] = true;
            row["fault"] = r.fault;
        } else {
            row["ads"] = party_to_json(r.ads);
            row["nieon"] = party_to_json(r.nieon.outcome);
            row["nieon"]["chosen_maneuver"] =
                std::string(nieon::to_token(r.nieon.chosen_maneuver));
            row["ads_collision_counted"] = scoring::collision_metric_counts(r, scoring::Party::Ads);
            row["nieon_collision_counted"] =
                scoring::collision_metric_counts(r, scoring::Party::Nieon);
        }
        doc["results"].push_back(std::move(row));
    }
    doc["inconclusive"] = report.inconclusive;
    doc["timing"] = {{"wall_ms", report.wall_ms}};
    return doc.dump(2) + "\n";
}

scoring::ReleaseSnapshot snapshot_from_report_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw IoFailure(std::string("malformed report json: ") + e.what());
    }
    scoring::ReleaseSnapshot snap;
    snap.database_hash = doc.at("database").at("content_hash").get<std::string>();
    for (const json& g : doc.at("groups")) snap.aggregate.groups.push_back(group_from_json(g));
    for (const json& g : doc.at("rollups")) {
        const scoring::GroupScore score = group_from_json(g);
        if (score.road_user_group == scenario::RoadUserGroup::Vehicle) {
            snap.aggregate.vehicle_rollup = score;
        } else {
            snap.aggregate.vru_rollup = score;
        }
    }
    return snap;
}

std::string group_bars_svg(const EvaluationReport& report) {
    const auto& groups = report.aggregate.groups;
    const int bar_w = 14;
    const int gap = 10;
    const int group_w = 4 * bar_w + 3 * 2 + gap;
    const int height = 240;
    const int base = 190;
    const int left = 50;
    const int width = left + static_cast<int>(groups.size()) * group_w + 20;

    int max_count = 1;
    for (const auto& g : groups) {
        max_count = std::max({max_count, g.ads_collisions, g.nieon_collisions, g.ads_serious,
                              g.nieon_serious});
    }
    const double scale = 150.0 / max_count;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\">\n";
    os << "<text x=\"10\" y=\"20\" font-size=\"12\">counts per safety group "
          "(ads/nieon collisions, ads/nieon serious)</text>\n";
    const char* colors[4] = {"#c0392b", "#2980b9", "#e67e22", "#27ae60"};
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const scoring::GroupScore& g = groups[i];
        const int counts[4] = {g.ads_collisions, g.nieon_collisions, g.ads_serious,
                               g.nieon_serious};
        const int x0 = left + static_cast<int>(i) * group_w;
        for (int b = 0; b < 4; ++b) {
            const int h = static_cast<int>(counts[b] * scale + 0.5);
            os << "<rect x=\"" << x0 + b * (bar_w + 2) << "\" y=\"" << base - h << "\" width=\""
               << bar_w << "\" height=\"" << h << "\" fill=\"" << colors[b] << "\"/>\n";
        }
        os << "<text x=\"" << x0 << "\" y=\"" << base + 14
           << "\" font-size=\"8\" transform=\"rotate(25 " << x0 << " " << base + 14 << ")\">"
           << g.group_id << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::vector<std::filesystem::path> emit_report(const EvaluationReport& report,
                                               const std::filesystem::path& out_dir,
                                               const std::vector<ReportFormat>& formats) {
    std::vector<std::filesystem::path> written;
    if (formats.empty()) return written;
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoFailure("cannot create " + out_dir.string() + ": " + ec.message());

    const auto write = [&](const std::filesystem::path& file, const std::string& content) {
        std::ofstream out(file, std::ios::binary);
        if (!out) throw IoFailure("cannot write " + file.string());
        out << content;
        if (!out) throw IoFailure("write failed for " + file.string());
        written.push_back(file);
    };

    for (const ReportFormat format : formats) {
        switch (format) {
            case ReportFormat::Csv: write(out_dir / "scores.csv", scores_csv(report)); break;
            case ReportFormat::Json: write(out_dir / "report.json", report_json(report)); break;
            case ReportFormat::Svg: write(out_dir / "groups.svg", group_bars_svg(report)); break;
        }
    }
    return written;
}

std::string discriminability_json(const scoring::DiscriminabilityReport& report) {
    json doc;
    doc["alpha"] = report.alpha;
    doc["deltas"] = report.deltas;
    doc["groups"] = json::array();
    for (const scoring::GroupDiscriminability& g : report.groups) {
        doc["groups"].push_back({{"group_id", g.group_id},
                                 {"n", g.n},
                                 {"p_low", g.p_low},
                                 {"p_high", g.p_high},
                                 {"z", g.z},
                                 {"p_value", g.p_value},
                                 {"discriminative", g.discriminative},
                                 {"degenerate", g.degenerate},
                                 {"note", g.note}});
    }
    return doc.dump(2) + "\n";
}

std::string repeatability_json(const scoring::RepeatabilityReport& report, bool jitter_enabled) {
    json doc;
    doc["runs"] = report.runs;
    doc["jitter_enabled"] = jitter_enabled;
    doc["overall_p95_collision_pct"] = report.overall_p95_collision_pct;
    doc["overall_p95_injury_pct"] = report.overall_p95_injury_pct;
    // Published reference points for the same diagnostic (context only, not
    // a target): 1.5% collision, 0.6% serious injury.
    doc["reference_context"] = {{"collision_pct", 1.5}, {"injury_pct", 0.6}};
    doc["groups"] = json::array();
    for (const auto& g : report.groups) {
        doc["groups"].push_back({{"group_id", g.group_id},
                                 {"n", g.n_scenarios},
                                 {"p95_collision_pct", g.p95_collision_pct},
                                 {"p95_injury_pct", g.p95_injury_pct}});
    }
    return doc.dump(2) + "\n";
}

std::string track_comparison_json(const scoring::TrackComparison& comparison) {
    json doc;
    doc["conservative"] = comparison.conservative;
    doc["ahead_fraction"] = comparison.ahead_fraction;
    doc["trajectories_ahead"] = comparison.trajectories_ahead;
    doc["matched"] = comparison.matched;
    doc["sim_collisions"] = comparison.sim_collisions;
    doc["track_collisions"] = comparison.track_collisions;
    doc["behind_scenarios"] = comparison.behind_scenarios;
    doc["pass"] = comparison.conservative && comparison.trajectories_ahead;
    return doc.dump(2) + "\n";
}

std::string release_diff_json(const scoring::ReleaseDiff& diff) {
    json doc;
    doc["any_regression"] = diff.any_regression;
    doc["groups"] = json::array();
    for (const scoring::ReleaseDiff::Row& row : diff.rows) {
        doc["groups"].push_back({{"group_id", row.group_id},
                                 {"d_ads_collisions", row.d_ads_collisions},
                                 {"d_nieon_collisions", row.d_nieon_collisions},
                                 {"d_ads_serious", row.d_ads_serious},
                                 {"d_nieon_serious", row.d_nieon_serious},
                                 {"regression", row.regression}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace cat::harness
