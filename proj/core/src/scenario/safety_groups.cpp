#include "cat/scenario/safety_groups.hpp"

#include <fstream>

#include <json.hpp>

#include "cat/errors.hpp"

namespace cat::scenario {

void SafetyGroupRegistry::register_group(SafetyGroup group) {
    if (find(group.id) != nullptr) {
        throw ConfigError("duplicate safety group id '" + group.id + "'");
    }
    for (const SafetyGroup& g : groups_) {
        if (g.conflict_type == group.conflict_type && g.conflict_partner == group.conflict_partner) {
            throw ConfigError("safety group rule (" + group.conflict_type + ", " +
                              std::string(to_token(group.conflict_partner)) +
                              ") already mapped to '" + g.id + "'");
        }
    }
    groups_.push_back(std::move(group));
}

const SafetyGroup* SafetyGroupRegistry::find(std::string_view id) const {
    for (const SafetyGroup& g : groups_) {
        if (g.id == id) return &g;
    }
    return nullptr;
}

const SafetyGroup& SafetyGroupRegistry::assign(std::string_view conflict_type,
                                               ActorClass partner) const {
    for (const SafetyGroup& g : groups_) {
        if (g.conflict_type == conflict_type && g.conflict_partner == partner) return g;
    }
    throw UnmappedConflict("no safety group rule for (" + std::string(conflict_type) + ", " +
                           std::string(to_token(partner)) + ")");
}

SafetyGroupRegistry SafetyGroupRegistry::from_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open safety group registry: " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed safety group registry " + path.string() + ": " + e.what());
    }
    SafetyGroupRegistry registry;
    for (const auto& entry : doc.at("groups")) {
        SafetyGroup g;
        g.id = entry.at("id").get<std::string>();
        g.conflict_type = entry.at("conflict_type").get<std::string>();
        g.conflict_partner = actor_class_from_token(entry.at("conflict_partner").get<std::string>());
        g.road_user_group =
            road_user_group_from_token(entry.at("road_user_group").get<std::string>());
        registry.register_group(std::move(g));
    }
    return registry;
}

std::string SafetyGroupRegistry::to_json() const {
    nlohmann::json doc;
    doc["groups"] = nlohmann::json::array();
    for (const SafetyGroup& g : groups_) {
        doc["groups"].push_back({{"id", g.id},
                                 {"conflict_type", g.conflict_type},
                                 {"conflict_partner", std::string(to_token(g.conflict_partner))},
                                 {"road_user_group", std::string(to_token(g.road_user_group))}});
    }
    return doc.dump(2);
}

std::string assign_safety_group(const ConcreteScenario& scenario,
                                const SafetyGroupRegistry& registry) {
    if (scenario.actor_trajectories.empty()) {
        throw UnmappedConflict("scenario '" + scenario.id + "' has no conflict partner actor");
    }
    const ActorClass partner = actor_class(scenario.actor_trajectories.front().kind);
    return registry.assign(scenario.conflict_type, partner).id;
}

RoadUserGroup road_user_group_of(const ConcreteScenario& scenario,
                                 const SafetyGroupRegistry& registry) {
    const SafetyGroup* group = registry.find(scenario.safety_group);
    if (group == nullptr) {
        throw UnmappedConflict("scenario '" + scenario.id + "' references unregistered safety group '" +
                               scenario.safety_group + "'");
    }
    return group->road_user_group;
}

}  // namespace cat::scenario
