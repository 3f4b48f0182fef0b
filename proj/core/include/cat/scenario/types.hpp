#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cat::scenario {

enum class ActorKind {
    PassengerVehicle,
    HeavyVehicle,
    Motorcyclist,
    Cyclist,
    Pedestrian,
    PedestrianChild,
    ScooterRider,
};

/// Top-level aggregation partition for scoring.
enum class RoadUserGroup { Vehicle, Vru };

/// Conflict-partner class used by the safety-group rule table. Coarser than
/// ActorKind: passenger and heavy vehicles share a class, as do adult and
/// child pedestrians.
enum class ActorClass { Vehicle, Pedestrian, Cyclist, ScooterRider, Motorcyclist };

ActorClass actor_class(ActorKind kind);

/// True for actors whose injury risk is modeled on impact speed rather than
/// delta-v. Motorcyclists fall on this side even though they aggregate under
/// the Vehicle road-user group by default.
bool uses_impact_speed_risk(ActorKind kind);

std::string_view to_token(ActorKind kind);
std::string_view to_token(RoadUserGroup group);
std::string_view to_token(ActorClass cls);
ActorKind actor_kind_from_token(std::string_view token);
RoadUserGroup road_user_group_from_token(std::string_view token);
ActorClass actor_class_from_token(std::string_view token);

enum class Maneuver {
    GoStraight,
    TurnLeft,
    TurnRight,
    CutIn,
    PullOut,
    CrossPath,
    RunRedLight,
    SuddenStop,
    WrongWay,
};

enum class Location { WithinLane, AcrossLane, OffRoad, Driveway, Crosswalk, Curbside };

std::string_view to_token(Maneuver m);
std::string_view to_token(Location l);
Maneuver maneuver_from_token(std::string_view token);
Location location_from_token(std::string_view token);

struct ManeuverSpec {
    Maneuver maneuver = Maneuver::GoStraight;
    Location start_location = Location::WithinLane;
    Location end_location = Location::WithinLane;

    bool operator==(const ManeuverSpec&) const = default;
};

/// Salient factors are tokens validated against a registry; the built-in
/// vocabulary can be extended through config registration only.
using SalientFactor = std::string;

std::span<const std::string_view> builtin_salient_factors();

struct FunctionalScenario {
    std::string id;
    ManeuverSpec ego_maneuver;
    std::vector<std::pair<ActorKind, ManeuverSpec>> actors;
    std::string layout_class;
    std::set<SalientFactor> salient_factors;
    std::string conflict_type;

    bool operator==(const FunctionalScenario&) const = default;
};

struct ParameterRange {
    double min = 0.0;
    double max = 0.0;
    double step = 1.0;
    std::string unit;

    bool operator==(const ParameterRange&) const = default;
};

struct LogicalScenario {
    FunctionalScenario functional;
    std::map<std::string, ParameterRange> parameter_ranges;

    bool operator==(const LogicalScenario&) const = default;
};

struct TrajectorySample {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;  // rad, in [-pi, pi)
    double speed = 0.0;    // m/s, >= 0

    bool operator==(const TrajectorySample&) const = default;
};

struct StimulusAnnotation {
    double onset_time = 0.0;
    double end_time = 0.0;

    bool operator==(const StimulusAnnotation&) const = default;
};

struct VehicleState {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;    // rad
    double speed = 0.0;      // m/s
    double accel = 0.0;      // m/s^2
    double curvature = 0.0;  // 1/m

    bool operator==(const VehicleState&) const = default;
};

struct FootprintSpec {
    double length = 0.0;  // m
    double width = 0.0;   // m

    bool operator==(const FootprintSpec&) const = default;
};

struct ActorTrajectory {
    ActorKind kind = ActorKind::PassengerVehicle;
    std::vector<TrajectorySample> samples;

    bool operator==(const ActorTrajectory&) const = default;
};

/// Condensed functional description carried on each concrete scenario so a
/// database can be diffed against an ODD profile without its DSL sources.
struct FunctionalSummary {
    std::string layout_class;
    Maneuver ego_maneuver = Maneuver::GoStraight;
    std::vector<std::pair<ActorKind, Maneuver>> actor_maneuvers;
    std::set<SalientFactor> salient_factors;

    bool operator==(const FunctionalSummary&) const = default;
};

struct ConcreteScenario {
    std::string id;
    std::string logical_parent;
    std::string test_request;
    VehicleState ego_start;
    std::vector<ActorTrajectory> actor_trajectories;
    StimulusAnnotation stimulus;
    std::string safety_group;
    FootprintSpec ego_footprint;
    std::vector<FootprintSpec> actor_footprints;
    double duration = 0.0;  // s

    // Generation metadata. conflict_type plus the first actor's class drive
    // safety-group assignment; ego_nominal is the unreacting ego motion the
    // reference driver replays before its response time elapses.
    std::string conflict_type;
    std::vector<TrajectorySample> ego_nominal;
    std::map<std::string, double> parameters;
    FunctionalSummary functional;
};

struct SafetyGroup {
    std::string id;
    std::string conflict_type;
    ActorClass conflict_partner = ActorClass::Vehicle;
    RoadUserGroup road_user_group = RoadUserGroup::Vehicle;

    bool operator==(const SafetyGroup&) const = default;
};

}  // namespace cat::scenario
