#include "cat/scoring/release_diff.hpp"

#include <map>

#include "cat/errors.hpp"

namespace cat::scoring {

ReleaseDiff release_diff(const ReleaseSnapshot& a, const ReleaseSnapshot& b) {
    if (a.database_hash != b.database_hash) {
        throw DatabaseMismatch("reports cover different database versions (" + a.database_hash +
                               " vs " + b.database_hash + ")");
    }
    std::map<std::string, const GroupScore*> a_groups;
    for (const GroupScore& g : a.aggregate.groups) a_groups[g.group_id] = &g;

    if (a.aggregate.groups.size() != b.aggregate.groups.size()) {
        throw DatabaseMismatch("reports cover different safety group sets");
    }

    ReleaseDiff diff;
    for (const GroupScore& gb : b.aggregate.groups) {
        const auto it = a_groups.find(gb.group_id);
        if (it == a_groups.end()) {
            throw DatabaseMismatch("group '" + gb.group_id + "' absent from the baseline report");
        }
        const GroupScore& ga = *it->second;
        ReleaseDiff::Row row;
        row.group_id = gb.group_id;
        row.d_ads_collisions = gb.ads_collisions - ga.ads_collisions;
        row.d_nieon_collisions = gb.nieon_collisions - ga.nieon_collisions;
        row.d_ads_serious = gb.ads_serious - ga.ads_serious;
        row.d_nieon_serious = gb.nieon_serious - ga.nieon_serious;
        row.regression = row.d_ads_collisions > 0 || row.d_ads_serious > 0;
        diff.any_regression = diff.any_regression || row.regression;
        diff.rows.push_back(std::move(row));
    }
    return diff;
}

}  // namespace cat::scoring
