#include "cat/scenario/json_io.hpp"

#include <fstream>

#include <json.hpp>

#include "cat/errors.hpp"

namespace cat::scenario {

namespace {

using nlohmann::json;

json sample_to_json(const TrajectorySample& s) {
    return json{{"t", s.t}, {"x", s.x}, {"y", s.y}, {"heading", s.heading}, {"speed", s.speed}};
}

TrajectorySample sample_from_json(const json& j) {
    TrajectorySample s;
    s.t = j.at("t").get<double>();
    s.x = j.at("x").get<double>();
    s.y = j.at("y").get<double>();
    s.heading = j.at("heading").get<double>();
    s.speed = j.at("speed").get<double>();
    return s;
}

json state_to_json(const VehicleState& s) {
    return json{{"x", s.x},         {"y", s.y},         {"heading", s.heading},
                {"speed", s.speed}, {"accel", s.accel}, {"curvature", s.curvature}};
}

VehicleState state_from_json(const json& j) {
    VehicleState s;
    s.x = j.at("x").get<double>();
    s.y = j.at("y").get<double>();
    s.heading = j.at("heading").get<double>();
    s.speed = j.at("speed").get<double>();
    s.accel = j.value("accel", 0.0);
    s.curvature = j.value("curvature", 0.0);
    return s;
}

json footprint_to_json(const FootprintSpec& f) {
    return json{{"length", f.length}, {"width", f.width}};
}

FootprintSpec footprint_from_json(const json& j) {
    return FootprintSpec{j.at("length").get<double>(), j.at("width").get<double>()};
}

}  // namespace

std::string scenario_to_json(const ConcreteScenario& s) {
    json doc;
    doc["id"] = s.id;
    doc["logical_parent"] = s.logical_parent;
    doc["test_request"] = s.test_request;
    doc["ego_start"] = state_to_json(s.ego_start);

    doc["actor_trajectories"] = json::array();
    for (const ActorTrajectory& at : s.actor_trajectories) {
        json samples = json::array();
        for (const TrajectorySample& sm : at.samples) samples.push_back(sample_to_json(sm));
        doc["actor_trajectories"].push_back(
            {{"kind", std::string(to_token(at.kind))}, {"samples", std::move(samples)}});
    }

    doc["stimulus"] = {{"onset_time", s.stimulus.onset_time}, {"end_time", s.stimulus.end_time}};
    doc["safety_group"] = s.safety_group;

    json footprints;
    footprints["ego"] = footprint_to_json(s.ego_footprint);
    footprints["actors"] = json::array();
    for (const FootprintSpec& f : s.actor_footprints) footprints["actors"].push_back(footprint_to_json(f));
    doc["footprints"] = std::move(footprints);

    doc["duration"] = s.duration;
    doc["conflict_type"] = s.conflict_type;

    doc["ego_nominal"] = json::array();
    for (const TrajectorySample& sm : s.ego_nominal) doc["ego_nominal"].push_back(sample_to_json(sm));

    doc["parameters"] = json::object();
    for (const auto& [name, value] : s.parameters) doc["parameters"][name] = value;

    json fn;
    fn["layout_class"] = s.functional.layout_class;
    fn["ego_maneuver"] = std::string(to_token(s.functional.ego_maneuver));
    fn["actor_maneuvers"] = json::array();
    for (const auto& [kind, mnv] : s.functional.actor_maneuvers) {
        fn["actor_maneuvers"].push_back(
            {{"kind", std::string(to_token(kind))}, {"maneuver", std::string(to_token(mnv))}});
    }
    fn["salient_factors"] = json::array();
    for (const SalientFactor& f : s.functional.salient_factors) fn["salient_factors"].push_back(f);
    doc["functional"] = std::move(fn);

    return doc.dump(2) + "\n";
}

ConcreteScenario scenario_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw IoFailure(std::string("malformed scenario json: ") + e.what());
    }
    try {
        ConcreteScenario s;
        s.id = doc.at("id").get<std::string>();
        s.logical_parent = doc.value("logical_parent", "");
        s.test_request = doc.value("test_request", "");
        s.ego_start = state_from_json(doc.at("ego_start"));
        for (const json& a : doc.at("actor_trajectories")) {
            ActorTrajectory at;
            at.kind = actor_kind_from_token(a.at("kind").get<std::string>());
            for (const json& sm : a.at("samples")) at.samples.push_back(sample_from_json(sm));
            s.actor_trajectories.push_back(std::move(at));
        }
        s.stimulus.onset_time = doc.at("stimulus").at("onset_time").get<double>();
        s.stimulus.end_time = doc.at("stimulus").at("end_time").get<double>();
        s.safety_group = doc.at("safety_group").get<std::string>();
        s.ego_footprint = footprint_from_json(doc.at("footprints").at("ego"));
        for (const json& f : doc.at("footprints").at("actors")) {
            s.actor_footprints.push_back(footprint_from_json(f));
        }
        s.duration = doc.at("duration").get<double>();
        s.conflict_type = doc.value("conflict_type", "");
        if (doc.contains("ego_nominal")) {
            for (const json& sm : doc["ego_nominal"]) s.ego_nominal.push_back(sample_from_json(sm));
        }
        if (doc.contains("parameters")) {
            for (const auto& [name, value] : doc["parameters"].items()) {
                s.parameters[name] = value.get<double>();
            }
        }
        if (doc.contains("functional")) {
            const json& fn = doc["functional"];
            s.functional.layout_class = fn.value("layout_class", "");
            s.functional.ego_maneuver =
                maneuver_from_token(fn.value("ego_maneuver", "go_straight"));
            if (fn.contains("actor_maneuvers")) {
                for (const json& am : fn["actor_maneuvers"]) {
                    s.functional.actor_maneuvers.emplace_back(
                        actor_kind_from_token(am.at("kind").get<std::string>()),
                        maneuver_from_token(am.at("maneuver").get<std::string>()));
                }
            }
            if (fn.contains("salient_factors")) {
                for (const json& f : fn["salient_factors"]) {
                    s.functional.salient_factors.insert(f.get<std::string>());
                }
            }
        }
        return s;
    } catch (const json::exception& e) {
        throw IoFailure(std::string("scenario json missing field: ") + e.what());
    }
}

ConcreteScenario load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open scenario file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return scenario_from_json(text);
}

std::filesystem::path write_scenario_file(const ConcreteScenario& scenario,
                                          const std::filesystem::path& db_root) {
    const std::filesystem::path dir = db_root / scenario.safety_group;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoFailure("cannot create " + dir.string() + ": " + ec.message());
    const std::filesystem::path file = dir / (scenario.id + ".json");
    std::ofstream out(file);
    if (!out) throw IoFailure("cannot write " + file.string());
    out << scenario_to_json(scenario);
    return file;
}

}  // namespace cat::scenario
