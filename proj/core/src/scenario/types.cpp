#include "cat/scenario/types.hpp"

#include <array>
#include <span>

#include "cat/errors.hpp"

namespace cat::scenario {

namespace {

template <typename Enum, std::size_t N>
Enum from_token(std::string_view token, const std::array<std::pair<std::string_view, Enum>, N>& table,
                std::string_view category) {
    for (const auto& [tok, value] : table) {
        if (tok == token) return value;
    }
    throw UnknownToken(std::string(token), std::string(category), -1, -1);
}

constexpr std::array<std::pair<std::string_view, ActorKind>, 7> kActorKinds{{
    {"passenger_vehicle", ActorKind::PassengerVehicle},
    {"heavy_vehicle", ActorKind::HeavyVehicle},
    {"motorcyclist", ActorKind::Motorcyclist},
    {"cyclist", ActorKind::Cyclist},
    {"pedestrian", ActorKind::Pedestrian},
    {"pedestrian_child", ActorKind::PedestrianChild},
    {"scooter_rider", ActorKind::ScooterRider},
}};

constexpr std::array<std::pair<std::string_view, Maneuver>, 9> kManeuvers{{
    {"go_straight", Maneuver::GoStraight},
    {"turn_left", Maneuver::TurnLeft},
    {"turn_right", Maneuver::TurnRight},
    {"cut_in", Maneuver::CutIn},
    {"pull_out", Maneuver::PullOut},
    {"cross_path", Maneuver::CrossPath},
    {"run_red_light", Maneuver::RunRedLight},
    {"sudden_stop", Maneuver::SuddenStop},
    {"wrong_way", Maneuver::WrongWay},
}};

constexpr std::array<std::pair<std::string_view, Location>, 6> kLocations{{
    {"within_lane", Location::WithinLane},
    {"across_lane", Location::AcrossLane},
    {"off_road", Location::OffRoad},
    {"driveway", Location::Driveway},
    {"crosswalk", Location::Crosswalk},
    {"curbside", Location::Curbside},
}};

constexpr std::array<std::string_view, 7> kBuiltinSalient{
    "occlusion",   "high_grade", "low_sun_angle", "double_parked_vehicle",
    "crowd",       "light_rail", "night_lighting",
};

}  // namespace

ActorClass actor_class(ActorKind kind) {
    switch (kind) {
        case ActorKind::PassengerVehicle:
        case ActorKind::HeavyVehicle:
            return ActorClass::Vehicle;
        case ActorKind::Pedestrian:
        case ActorKind::PedestrianChild:
            return ActorClass::Pedestrian;
        case ActorKind::Cyclist:
            return ActorClass::Cyclist;
        case ActorKind::ScooterRider:
            return ActorClass::ScooterRider;
        case ActorKind::Motorcyclist:
            return ActorClass::Motorcyclist;
    }
    return ActorClass::Vehicle;
}

bool uses_impact_speed_risk(ActorKind kind) {
    return actor_class(kind) != ActorClass::Vehicle;
}

std::string_view to_token(ActorKind kind) {
    for (const auto& [tok, value] : kActorKinds) {
        if (value == kind) return tok;
    }
    return "passenger_vehicle";
}

std::string_view to_token(RoadUserGroup group) {
    return group == RoadUserGroup::Vehicle ? "vehicle" : "vru";
}

std::string_view to_token(ActorClass cls) {
    switch (cls) {
        case ActorClass::Vehicle: return "vehicle";
        case ActorClass::Pedestrian: return "pedestrian";
        case ActorClass::Cyclist: return "cyclist";
        case ActorClass::ScooterRider: return "scooter_rider";
        case ActorClass::Motorcyclist: return "motorcyclist";
    }
    return "vehicle";
}

std::string_view to_token(Maneuver m) {
    for (const auto& [tok, value] : kManeuvers) {
        if (value == m) return tok;
    }
    return "go_straight";
}

std::string_view to_token(Location l) {
    for (const auto& [tok, value] : kLocations) {
        if (value == l) return tok;
    }
    return "within_lane";
}

ActorKind actor_kind_from_token(std::string_view token) {
    return from_token(token, kActorKinds, "actor kind");
}

RoadUserGroup road_user_group_from_token(std::string_view token) {
    if (token == "vehicle") return RoadUserGroup::Vehicle;
    if (token == "vru") return RoadUserGroup::Vru;
    throw UnknownToken(std::string(token), "road user group", -1, -1);
}

ActorClass actor_class_from_token(std::string_view token) {
    if (token == "vehicle") return ActorClass::Vehicle;
    if (token == "pedestrian") return ActorClass::Pedestrian;
    if (token == "cyclist") return ActorClass::Cyclist;
    if (token == "scooter_rider") return ActorClass::ScooterRider;
    if (token == "motorcyclist") return ActorClass::Motorcyclist;
    throw UnknownToken(std::string(token), "actor class", -1, -1);
}

Maneuver maneuver_from_token(std::string_view token) {
    return from_token(token, kManeuvers, "maneuver");
}

Location location_from_token(std::string_view token) {
    return from_token(token, kLocations, "location");
}

std::span<const std::string_view> builtin_salient_factors() { return kBuiltinSalient; }

}  // namespace cat::scenario
