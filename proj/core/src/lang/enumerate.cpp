#include "cat/lang/enumerate.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "cat/errors.hpp"

namespace cat::lang {

using scenario::ActorKind;
using scenario::Location;
using scenario::Maneuver;

EnumerationVocab EnumerationVocab::bundled(const VocabRegistry& registry) {
    EnumerationVocab v;
    v.ego_maneuvers = {Maneuver::GoStraight, Maneuver::TurnLeft, Maneuver::TurnRight};
    v.actor_kinds = {ActorKind::PassengerVehicle, ActorKind::HeavyVehicle, ActorKind::Motorcyclist,
                     ActorKind::Cyclist,          ActorKind::Pedestrian,   ActorKind::PedestrianChild,
                     ActorKind::ScooterRider};
    v.actor_maneuvers = {Maneuver::GoStraight, Maneuver::TurnLeft,  Maneuver::TurnRight,
                         Maneuver::CutIn,      Maneuver::PullOut,   Maneuver::CrossPath,
                         Maneuver::RunRedLight, Maneuver::SuddenStop, Maneuver::WrongWay};
    v.layout_classes.assign(registry.layout_classes().begin(), registry.layout_classes().end());
    v.salient_factors.assign(registry.salient_factors().begin(), registry.salient_factors().end());
    return v;
}

bool OddProfile::allows_layout(std::string_view layout_class) const {
    return allowed_layout_classes.count(std::string(layout_class)) > 0;
}

bool OddProfile::excludes_ego_maneuver(Maneuver maneuver, std::string_view layout_class) const {
    for (const ManeuverExclusion& e : excluded_maneuvers) {
        if (e.maneuver != maneuver) continue;
        if (!e.layout_class || *e.layout_class == layout_class) return true;
    }
    return false;
}

OddProfile odd_profile_from_json_file(const std::filesystem::path& path,
                                      const VocabRegistry& vocab) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open ODD profile: " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed ODD profile " + path.string() + ": " + e.what());
    }
    OddProfile odd;
    odd.name = doc.at("name").get<std::string>();
    odd.max_speed_limit = doc.at("max_speed_limit").get<double>();
    for (const auto& t : doc.at("allowed_layout_classes")) {
        const std::string token = t.get<std::string>();
        if (!vocab.has_layout_class(token)) throw UnknownToken(token, "layout class", -1, -1);
        odd.allowed_layout_classes.insert(token);
    }
    for (const auto& e : doc.value("excluded_maneuvers", nlohmann::json::array())) {
        ManeuverExclusion ex;
        ex.maneuver = scenario::maneuver_from_token(e.at("maneuver").get<std::string>());
        if (e.contains("layout_class")) {
            const std::string token = e["layout_class"].get<std::string>();
            if (!vocab.has_layout_class(token)) throw UnknownToken(token, "layout class", -1, -1);
            ex.layout_class = token;
        }
        odd.excluded_maneuvers.insert(std::move(ex));
    }
    for (const auto& t : doc.value("present_salient_factors", nlohmann::json::array())) {
        const std::string token = t.get<std::string>();
        if (!vocab.has_salient_factor(token)) throw UnknownToken(token, "salient factor", -1, -1);
        odd.present_salient_factors.insert(token);
    }
    return odd;
}

scenario::ManeuverSpec canonical_ego_spec(Maneuver maneuver) {
    switch (maneuver) {
        case Maneuver::TurnLeft:
        case Maneuver::TurnRight:
            return {maneuver, Location::WithinLane, Location::AcrossLane};
        default:
            return {maneuver, Location::WithinLane, Location::WithinLane};
    }
}

scenario::ManeuverSpec canonical_actor_spec(Maneuver maneuver) {
    switch (maneuver) {
        case Maneuver::GoStraight: return {maneuver, Location::AcrossLane, Location::AcrossLane};
        case Maneuver::TurnLeft: return {maneuver, Location::AcrossLane, Location::AcrossLane};
        case Maneuver::TurnRight: return {maneuver, Location::AcrossLane, Location::AcrossLane};
        case Maneuver::CutIn: return {maneuver, Location::WithinLane, Location::WithinLane};
        case Maneuver::PullOut: return {maneuver, Location::Curbside, Location::WithinLane};
        case Maneuver::CrossPath: return {maneuver, Location::Curbside, Location::AcrossLane};
        case Maneuver::RunRedLight: return {maneuver, Location::AcrossLane, Location::AcrossLane};
        case Maneuver::SuddenStop: return {maneuver, Location::WithinLane, Location::WithinLane};
        case Maneuver::WrongWay: return {maneuver, Location::AcrossLane, Location::WithinLane};
    }
    return {maneuver, Location::WithinLane, Location::WithinLane};
}

namespace {

std::vector<std::set<scenario::SalientFactor>> salient_subsets(
    const std::vector<scenario::SalientFactor>& factors, const OddProfile& odd, int cap) {
    std::vector<scenario::SalientFactor> usable;
    for (const scenario::SalientFactor& f : factors) {
        if (odd.present_salient_factors.count(f) > 0) usable.push_back(f);
    }
    std::sort(usable.begin(), usable.end());

    std::vector<std::set<scenario::SalientFactor>> subsets{{}};
    std::vector<std::set<scenario::SalientFactor>> frontier{{}};
    for (int size = 1; size <= cap; ++size) {
        std::vector<std::set<scenario::SalientFactor>> next;
        for (const auto& base : frontier) {
            for (const scenario::SalientFactor& f : usable) {
                if (!base.empty() && f <= *base.rbegin()) continue;
                auto grown = base;
                grown.insert(f);
                next.push_back(std::move(grown));
            }
        }
        subsets.insert(subsets.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return subsets;
}

std::string combo_id(Maneuver ego, ActorKind kind, Maneuver actor, const std::string& layout,
                     const std::set<scenario::SalientFactor>& salient) {
    std::string id = "cmb_" + std::string(scenario::to_token(ego)) + "__" +
                     std::string(scenario::to_token(kind)) + "_" +
                     std::string(scenario::to_token(actor)) + "__" + layout;
    for (const scenario::SalientFactor& f : salient) id += "__" + f;
    return id;
}

}  // namespace

std::vector<scenario::FunctionalScenario> enumerate_combinations(const EnumerationVocab& vocab,
                                                                 const OddProfile& odd) {
    if (vocab.ego_maneuvers.empty() || vocab.actor_kinds.empty() ||
        vocab.actor_maneuvers.empty() || vocab.layout_classes.empty()) {
        throw ConfigError("enumeration vocabularies must be non-empty");
    }

    const auto subsets = salient_subsets(vocab.salient_factors, odd, vocab.max_salient_subset);

    std::vector<scenario::FunctionalScenario> out;
    for (const std::string& layout : vocab.layout_classes) {
        if (!odd.allows_layout(layout)) continue;
        for (Maneuver ego : vocab.ego_maneuvers) {
            if (odd.excludes_ego_maneuver(ego, layout)) continue;
            for (ActorKind kind : vocab.actor_kinds) {
                for (Maneuver actor : vocab.actor_maneuvers) {
                    for (const auto& salient : subsets) {
                        scenario::FunctionalScenario fs;
                        fs.id = combo_id(ego, kind, actor, layout, salient);
                        fs.ego_maneuver = canonical_ego_spec(ego);
                        fs.actors.emplace_back(kind, canonical_actor_spec(actor));
                        fs.layout_class = layout;
                        fs.salient_factors = salient;
                        out.push_back(std::move(fs));
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
}

}  // namespace cat::lang
