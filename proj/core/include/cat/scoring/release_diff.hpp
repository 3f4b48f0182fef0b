#pragma once

#include <string>
#include <vector>

#include "cat/scoring/aggregate.hpp"

namespace cat::scoring {

/// Minimal view of a stored evaluation needed for release comparison.
struct ReleaseSnapshot {
    std::string database_hash;
    Aggregate aggregate;
};

struct ReleaseDiff {
    struct Row {
        std::string group_id;
        int d_ads_collisions = 0;
        int d_nieon_collisions = 0;
        int d_ads_serious = 0;
        int d_nieon_serious = 0;
        bool regression = false;  // ADS counts increased
    };
    std::vector<Row> rows;
    bool any_regression = false;
};

/// Per-group signed count deltas (b minus a) with regression flags when the
/// ADS counts increased. Informational only; acceptance is unaffected.
/// Throws DatabaseMismatch when the snapshots cover different databases.
ReleaseDiff release_diff(const ReleaseSnapshot& a, const ReleaseSnapshot& b);

}  // namespace cat::scoring
