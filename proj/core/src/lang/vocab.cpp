#include "cat/lang/vocab.hpp"

#include <fstream>

#include <json.hpp>

#include "cat/errors.hpp"

namespace cat::lang {

VocabRegistry VocabRegistry::bundled() {
    VocabRegistry v;
    for (const char* layout : {"midblock_2lane", "driveway_midblock", "intersection_4way_signal",
                               "intersection_4way_unprotected", "roundabout", "light_rail_crossing"}) {
        v.register_layout_class(layout);
    }
    for (const char* conflict :
         {"crossing_pedestrian_midblock", "crossing_pedestrian_intersection", "crossing_cyclist",
          "crossing_scooter_crosswalk", "cutting_across_perpendicular", "cutting_in_lane_change",
          "pull_out_ahead", "lead_vehicle_sudden_stop", "opposing_wrong_way",
          "left_turn_across_path", "crossing_motorcyclist"}) {
        v.register_conflict_type(conflict);
    }
    for (std::string_view factor : scenario::builtin_salient_factors()) {
        v.register_salient_factor(std::string(factor));
    }
    return v;
}

VocabRegistry VocabRegistry::from_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open vocabulary registry: " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed vocabulary registry " + path.string() + ": " + e.what());
    }
    VocabRegistry v = bundled();
    for (const auto& t : doc.value("layout_classes", nlohmann::json::array())) {
        v.register_layout_class(t.get<std::string>());
    }
    for (const auto& t : doc.value("conflict_types", nlohmann::json::array())) {
        v.register_conflict_type(t.get<std::string>());
    }
    for (const auto& t : doc.value("salient_factors", nlohmann::json::array())) {
        v.register_salient_factor(t.get<std::string>());
    }
    return v;
}

void VocabRegistry::register_layout_class(std::string token) {
    layout_classes_.insert(std::move(token));
}

void VocabRegistry::register_conflict_type(std::string token) {
    conflict_types_.insert(std::move(token));
}

void VocabRegistry::register_salient_factor(std::string token) {
    salient_factors_.insert(std::move(token));
}

bool VocabRegistry::has_layout_class(std::string_view token) const {
    return layout_classes_.count(std::string(token)) > 0;
}

bool VocabRegistry::has_conflict_type(std::string_view token) const {
    return conflict_types_.count(std::string(token)) > 0;
}

bool VocabRegistry::has_salient_factor(std::string_view token) const {
    return salient_factors_.count(std::string(token)) > 0;
}

}  // namespace cat::lang
