#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "cat/scenario/safety_groups.hpp"
#include "cat/scenario/types.hpp"
#include "cat/scenario/validate.hpp"

namespace cat::harness {

struct TestRequest {
    std::string id;
    std::string parent_safety_group;
    std::string specification;
    std::string author;
    std::string status;
};

/// A scenario database: a directory tree grouped by safety group, one JSON
/// file per scenario, plus the test-request registry at the root.
struct ScenarioDatabase {
    std::vector<scenario::ConcreteScenario> scenarios;  // sorted by id
    std::map<std::string, TestRequest> test_requests;
    std::string content_hash;  // hash over every scenario file, order-independent
    std::filesystem::path root;
};

ScenarioDatabase load_database(const std::filesystem::path& root);

void write_database(const ScenarioDatabase& db, const std::filesystem::path& root);

/// Validates every scenario plus database-level invariants (unique ids,
/// resolvable test requests).
scenario::ValidationReport validate_database(const ScenarioDatabase& db,
                                             const scenario::SafetyGroupRegistry& registry);

/// FNV-1a over the sorted scenario file contents.
std::string database_content_hash(const ScenarioDatabase& db);

}  // namespace cat::harness
