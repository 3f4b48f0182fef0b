#pragma once

#include <filesystem>
#include <string>

#include "cat/scenario/types.hpp"

namespace cat::scenario {

/// One scenario per file; field names follow the domain type definitions.
std::string scenario_to_json(const ConcreteScenario& scenario);
ConcreteScenario scenario_from_json(const std::string& text);

ConcreteScenario load_scenario_file(const std::filesystem::path& path);

/// Writes <db_root>/<safety_group>/<id>.json, creating directories as needed.
std::filesystem::path write_scenario_file(const ConcreteScenario& scenario,
                                          const std::filesystem::path& db_root);

}  // namespace cat::scenario
