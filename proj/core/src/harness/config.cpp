#include "cat/harness/config.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cat/errors.hpp"

namespace cat::harness {

namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    const auto end = s.find_last_not_of(" \t\r");
    if (begin == std::string_view::npos) return "";
    return std::string(s.substr(begin, end - begin + 1));
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "' expects a number, got '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw ConfigError("key '" + key + "' expects an integer, got '" + value + "'");
    }
    return i;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ConfigError("key '" + key + "' expects true/false, got '" + value + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string t = trim(item);
        if (!t.empty()) out.push_back(parse_double(key, t));
    }
    return out;
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

using scenario::ActorKind;

const std::map<std::string, ActorKind>& actor_kind_keys() {
    static const std::map<std::string, ActorKind> keys{
        {"passenger_vehicle", ActorKind::PassengerVehicle},
        {"heavy_vehicle", ActorKind::HeavyVehicle},
        {"motorcyclist", ActorKind::Motorcyclist},
        {"cyclist", ActorKind::Cyclist},
        {"pedestrian", ActorKind::Pedestrian},
        {"pedestrian_child", ActorKind::PedestrianChild},
        {"scooter_rider", ActorKind::ScooterRider},
    };
    return keys;
}

}  // namespace

HarnessConfig HarnessConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_text(text);
}

HarnessConfig HarnessConfig::from_text(std::string_view text) {
    HarnessConfig c;
    std::stringstream ss{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(ss, raw)) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + " is not 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "sim.step") c.sim_step = parse_double(key, value);
        else if (key == "sim.max_brake") c.sim_limits.max_brake = parse_double(key, value);
        else if (key == "sim.max_accel") c.sim_limits.max_accel = parse_double(key, value);
        else if (key == "sim.max_curvature") c.sim_limits.max_curvature = parse_double(key, value);
        else if (key == "latency.perception") c.latency.perception_delay = parse_double(key, value);
        else if (key == "latency.planning") c.latency.planning_delay = parse_double(key, value);
        else if (key == "latency.actuation") c.latency.actuation_delay = parse_double(key, value);
        else if (key == "nieon.vehicle.intercept") c.nieon_vehicle.intercept = parse_double(key, value);
        else if (key == "nieon.vehicle.slope") c.nieon_vehicle.slope = parse_double(key, value);
        else if (key == "nieon.vehicle.floor") c.nieon_vehicle.floor = parse_double(key, value);
        else if (key == "nieon.vru.intercept") c.nieon_vru.intercept = parse_double(key, value);
        else if (key == "nieon.vru.slope") c.nieon_vru.slope = parse_double(key, value);
        else if (key == "nieon.vru.floor") c.nieon_vru.floor = parse_double(key, value);
        else if (key == "nieon.max_decel") c.maneuver_limits.max_decel = parse_double(key, value);
        else if (key == "nieon.jerk_limit") c.maneuver_limits.jerk_limit = parse_double(key, value);
        else if (key == "nieon.max_lateral_accel") c.maneuver_limits.max_lateral_accel = parse_double(key, value);
        else if (key == "nieon.swerve_offset") c.maneuver_limits.swerve_offset = parse_double(key, value);
        else if (key == "nieon.swerve_includes_braking") c.swerve_includes_braking = parse_bool(key, value);
        else if (key == "severity.restitution") c.severity.restitution = parse_double(key, value);
        else if (key == "severity.ego_mass") c.severity.ego_mass = parse_double(key, value);
        else if (key == "severity.vehicle.intercept") c.severity.curves.vehicle.intercept = parse_double(key, value);
        else if (key == "severity.vehicle.slope") c.severity.curves.vehicle.slope = parse_double(key, value);
        else if (key == "severity.vehicle.cos_coeff") c.severity.curves.vehicle.cos_coeff = parse_double(key, value);
        else if (key == "severity.vehicle.sin_coeff") c.severity.curves.vehicle.sin_coeff = parse_double(key, value);
        else if (key == "severity.threshold.vehicle") c.severity.thresholds.vehicle_to_vehicle = parse_double(key, value);
        else if (key == "severity.threshold.child_pedestrian") c.severity.thresholds.child_pedestrian = parse_double(key, value);
        else if (key == "severity.threshold.other_vru") c.severity.thresholds.other_vru = parse_double(key, value);
        else if (key == "ztest.alpha") c.ztest_alpha = parse_double(key, value);
        else if (key == "ztest.deltas") c.ztest_deltas = parse_list(key, value);
        else if (key == "jitter.enabled") c.jitter_enabled = parse_bool(key, value);
        else if (key == "jitter.seed") c.jitter_seed = static_cast<std::uint64_t>(parse_double(key, value));
        else if (key == "parallelism") c.parallelism = parse_int(key, value);
        else if (key == "acceptance.slack") c.acceptance_slack = parse_int(key, value);
        else if (key == "database") c.database_path = value;
        else if (key == "policy") c.policy = value;
        else if (key == "aeb.ttc_trigger") c.aeb_ttc_trigger = parse_double(key, value);
        else if (key == "aeb.max_decel") c.aeb_max_decel = parse_double(key, value);
        else if (key == "aeb.jerk") c.aeb_jerk = parse_double(key, value);
        else {
            bool matched = false;
            for (const auto& [token, kind] : actor_kind_keys()) {
                if (key == "severity.mass." + token) {
                    c.severity.partner_masses[kind] = parse_double(key, value);
                    matched = true;
                } else if (key == "severity.vru." + token + ".intercept") {
                    c.severity.curves.vru[kind].intercept = parse_double(key, value);
                    matched = true;
                } else if (key == "severity.vru." + token + ".slope") {
                    c.severity.curves.vru[kind].slope = parse_double(key, value);
                    matched = true;
                }
            }
            if (!matched) {
                throw ConfigError("unknown config key '" + key + "' (line " +
                                  std::to_string(line_no) + ")");
            }
        }
    }
    c.validate();
    return c;
}

void HarnessConfig::validate() const {
    if (sim_step <= 0.0 || sim_step > 0.05) {
        throw ConfigError("sim.step must lie in (0, 0.05] s");
    }
    nieon_vehicle.validate();
    nieon_vru.validate();
    if (nieon_vru.intercept > nieon_vehicle.intercept) {
        throw ConfigError("the VRU response-time intercept must not exceed the Vehicle intercept");
    }
    maneuver_limits.validate();
    latency.validate(sim_step);
    if (ztest_alpha <= 0.0 || ztest_alpha >= 1.0) {
        throw ConfigError("ztest.alpha must lie in (0, 1)");
    }
    for (const auto& [kind, curve] : severity.curves.vru) {
        if (curve.slope <= 0.0) {
            throw ConfigError("risk curve slope for '" + std::string(scenario::to_token(kind)) +
                              "' must be positive");
        }
    }
    if (severity.curves.vehicle.slope <= 0.0) {
        throw ConfigError("vehicle risk curve slope must be positive");
    }
    const auto threshold_ok = [](double t) { return t > 0.0 && t < 1.0; };
    if (!threshold_ok(severity.thresholds.vehicle_to_vehicle) ||
        !threshold_ok(severity.thresholds.child_pedestrian) ||
        !threshold_ok(severity.thresholds.other_vru)) {
        throw ConfigError("serious-injury thresholds must lie in (0, 1)");
    }
    if (severity.thresholds.child_pedestrian >= severity.thresholds.other_vru) {
        throw ConfigError("the child pedestrian threshold must be below the other-VRU threshold");
    }
    if (parallelism < 1) throw ConfigError("parallelism must be >= 1");
    if (acceptance_slack < 0) throw ConfigError("acceptance.slack must be >= 0");
}

std::map<std::string, std::string> HarnessConfig::echo() const {
    std::map<std::string, std::string> e;
    e["sim.step"] = fmt(sim_step);
    e["sim.max_brake"] = fmt(sim_limits.max_brake);
    e["sim.max_accel"] = fmt(sim_limits.max_accel);
    e["sim.max_curvature"] = fmt(sim_limits.max_curvature);
    e["latency.perception"] = fmt(latency.perception_delay);
    e["latency.planning"] = fmt(latency.planning_delay);
    e["latency.actuation"] = fmt(latency.actuation_delay);
    e["nieon.vehicle.intercept"] = fmt(nieon_vehicle.intercept);
    e["nieon.vehicle.slope"] = fmt(nieon_vehicle.slope);
    e["nieon.vehicle.floor"] = fmt(nieon_vehicle.floor);
    e["nieon.vru.intercept"] = fmt(nieon_vru.intercept);
    e["nieon.vru.slope"] = fmt(nieon_vru.slope);
    e["nieon.vru.floor"] = fmt(nieon_vru.floor);
    e["nieon.max_decel"] = fmt(maneuver_limits.max_decel);
    e["nieon.jerk_limit"] = fmt(maneuver_limits.jerk_limit);
    e["nieon.max_lateral_accel"] = fmt(maneuver_limits.max_lateral_accel);
    e["nieon.swerve_offset"] = fmt(maneuver_limits.swerve_offset);
    e["nieon.swerve_includes_braking"] = swerve_includes_braking ? "true" : "false";
    e["severity.restitution"] = fmt(severity.restitution);
    e["severity.ego_mass"] = fmt(severity.ego_mass);
    e["severity.vehicle.intercept"] = fmt(severity.curves.vehicle.intercept);
    e["severity.vehicle.slope"] = fmt(severity.curves.vehicle.slope);
    e["severity.vehicle.cos_coeff"] = fmt(severity.curves.vehicle.cos_coeff);
    e["severity.vehicle.sin_coeff"] = fmt(severity.curves.vehicle.sin_coeff);
    e["severity.threshold.vehicle"] = fmt(severity.thresholds.vehicle_to_vehicle);
    e["severity.threshold.child_pedestrian"] = fmt(severity.thresholds.child_pedestrian);
    e["severity.threshold.other_vru"] = fmt(severity.thresholds.other_vru);
    for (const auto& [token, kind] : actor_kind_keys()) {
        if (const auto it = severity.partner_masses.find(kind); it != severity.partner_masses.end()) {
            e["severity.mass." + token] = fmt(it->second);
        }
        if (const auto it = severity.curves.vru.find(kind); it != severity.curves.vru.end()) {
            e["severity.vru." + token + ".intercept"] = fmt(it->second.intercept);
            e["severity.vru." + token + ".slope"] = fmt(it->second.slope);
        }
    }
    std::string deltas;
    for (std::size_t i = 0; i < ztest_deltas.size(); ++i) {
        if (i > 0) deltas += ",";
        deltas += fmt(ztest_deltas[i]);
    }
    e["ztest.alpha"] = fmt(ztest_alpha);
    e["ztest.deltas"] = deltas;
    e["jitter.enabled"] = jitter_enabled ? "true" : "false";
    e["jitter.seed"] = std::to_string(jitter_seed);
    e["parallelism"] = std::to_string(parallelism);
    e["acceptance.slack"] = std::to_string(acceptance_slack);
    e["database"] = database_path;
    e["policy"] = policy;
    e["aeb.ttc_trigger"] = fmt(aeb_ttc_trigger);
    e["aeb.max_decel"] = fmt(aeb_max_decel);
    e["aeb.jerk"] = fmt(aeb_jerk);
    return e;
}

int effective_parallelism(const HarnessConfig& config) {
    if (const char* env = std::getenv("CAT_HARNESS_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (const std::exception&) {
            throw ConfigError(std::string("CAT_HARNESS_THREADS is not a positive integer: ") + env);
        }
    }
    return config.parallelism;
}

}  // namespace cat::harness
