#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cat/lang/vocab.hpp"
#include "cat/scenario/types.hpp"

namespace cat::lang {

/// Enumeration axes for the combinatorial analysis. Salient-factor subsets
/// are capped (default size 2) to keep the product finite.
struct EnumerationVocab {
    std::vector<scenario::Maneuver> ego_maneuvers;
    std::vector<scenario::ActorKind> actor_kinds;
    std::vector<scenario::Maneuver> actor_maneuvers;
    std::vector<std::string> layout_classes;
    std::vector<scenario::SalientFactor> salient_factors;
    int max_salient_subset = 2;

    static EnumerationVocab bundled(const VocabRegistry& registry);
};

struct ManeuverExclusion {
    scenario::Maneuver maneuver = scenario::Maneuver::GoStraight;
    std::optional<std::string> layout_class;  // empty: excluded everywhere

    auto operator<=>(const ManeuverExclusion&) const = default;
};

struct OddProfile {
    std::string name;
    double max_speed_limit = 0.0;  // m/s
    std::set<std::string> allowed_layout_classes;
    std::set<ManeuverExclusion> excluded_maneuvers;  // applies to the ego maneuver
    std::set<scenario::SalientFactor> present_salient_factors;

    bool allows_layout(std::string_view layout_class) const;
    bool excludes_ego_maneuver(scenario::Maneuver maneuver, std::string_view layout_class) const;
};

OddProfile odd_profile_from_json_file(const std::filesystem::path& path,
                                      const VocabRegistry& vocab);

/// Canonical maneuver-to-location templates used when enumeration builds
/// ManeuverSpecs from bare maneuver tokens.
scenario::ManeuverSpec canonical_ego_spec(scenario::Maneuver maneuver);
scenario::ManeuverSpec canonical_actor_spec(scenario::Maneuver maneuver);

/// Cartesian product of the axes minus ODD exclusions; deterministic order,
/// duplicate-free. Salient subsets run from the empty set up to the cap.
std::vector<scenario::FunctionalScenario> enumerate_combinations(const EnumerationVocab& vocab,
                                                                 const OddProfile& odd);

}  // namespace cat::lang
