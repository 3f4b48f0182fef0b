#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cat/harness/runner.hpp"
#include "cat/scoring/release_diff.hpp"
#include "cat/scoring/repeatability.hpp"
#include "cat/scoring/track_compare.hpp"
#include "cat/scoring/ztest.hpp"

namespace cat::harness {

enum class ReportFormat { Csv, Json, Svg };

ReportFormat report_format_from_token(std::string_view token);

/// Score table: one row per safety group plus the two road-user rollups.
/// Columns: group_id, road_user_group, n, ads_collisions, nieon_collisions,
/// ads_serious, nieon_serious, pass. Byte-stable for a fixed report.
std::string scores_csv(const EvaluationReport& report);

/// Full structured report (verdicts, per-scenario rows, config echo,
/// database hash). Timing is carried in a separate top-level field so the
/// deterministic payload can be compared across runs.
std::string report_json(const EvaluationReport& report);

/// Reloads the deterministic part of a stored report for diffing.
scoring::ReleaseSnapshot snapshot_from_report_json(const std::string& text);

/// Per-group bar chart of the four counts as a static SVG.
std::string group_bars_svg(const EvaluationReport& report);

/// Writes the requested artifacts into out_dir (scores.csv, report.json,
/// groups.svg). Throws IoFailure on unwritable targets.
std::vector<std::filesystem::path> emit_report(const EvaluationReport& report,
                                               const std::filesystem::path& out_dir,
                                               const std::vector<ReportFormat>& formats);

std::string discriminability_json(const scoring::DiscriminabilityReport& report);
std::string repeatability_json(const scoring::RepeatabilityReport& report,
                               bool jitter_enabled);
std::string track_comparison_json(const scoring::TrackComparison& comparison);
std::string release_diff_json(const scoring::ReleaseDiff& diff);

}  // namespace cat::harness
