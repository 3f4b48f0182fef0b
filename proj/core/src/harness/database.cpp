#include "cat/harness/database.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include <json.hpp>

#include "cat/errors.hpp"
#include "cat/scenario/json_io.hpp"

namespace cat::harness {

namespace {

constexpr const char* kRequestsFile = "test_requests.json";
constexpr const char* kGroupsFile = "safety_groups.json";

std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 0xCBF29CE484222325ULL) {
    for (const char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace

ScenarioDatabase load_database(const std::filesystem::path& root) {
    if (!std::filesystem::is_directory(root)) {
        throw IoFailure("scenario database directory not found: " + root.string());
    }
    ScenarioDatabase db;
    db.root = root;

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        if (entry.path().filename() == kRequestsFile || entry.path().filename() == kGroupsFile) {
            continue;
        }
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const std::filesystem::path& file : files) {
        db.scenarios.push_back(scenario::load_scenario_file(file));
    }
    std::sort(db.scenarios.begin(), db.scenarios.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });

    const std::filesystem::path requests = root / kRequestsFile;
    if (std::filesystem::exists(requests)) {
        std::ifstream in(requests);
        if (!in) throw IoFailure("cannot open " + requests.string());
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw IoFailure("malformed " + requests.string() + ": " + e.what());
        }
        for (const auto& entry : doc.value("test_requests", nlohmann::json::array())) {
            TestRequest tr;
            tr.id = entry.at("id").get<std::string>();
            tr.parent_safety_group = entry.value("parent_safety_group", "");
            tr.specification = entry.value("specification", "");
            tr.author = entry.value("author", "");
            tr.status = entry.value("status", "");
            db.test_requests[tr.id] = std::move(tr);
        }
    }

    db.content_hash = database_content_hash(db);
    return db;
}

void write_database(const ScenarioDatabase& db, const std::filesystem::path& root) {
    std::error_code ec;
    std::filesystem::create_directories(root, ec);
    if (ec) throw IoFailure("cannot create " + root.string() + ": " + ec.message());
    for (const scenario::ConcreteScenario& s : db.scenarios) {
        scenario::write_scenario_file(s, root);
    }
    nlohmann::json doc;
    doc["test_requests"] = nlohmann::json::array();
    for (const auto& [id, tr] : db.test_requests) {
        doc["test_requests"].push_back({{"id", tr.id},
                                        {"parent_safety_group", tr.parent_safety_group},
                                        {"specification", tr.specification},
                                        {"author", tr.author},
                                        {"status", tr.status}});
    }
    std::ofstream out(root / kRequestsFile);
    if (!out) throw IoFailure("cannot write " + (root / kRequestsFile).string());
    out << doc.dump(2) << "\n";
}

scenario::ValidationReport validate_database(const ScenarioDatabase& db,
                                             const scenario::SafetyGroupRegistry& registry) {
    scenario::ValidationReport report;
    if (db.scenarios.empty()) {
        report.violations.push_back({"non-empty database", db.root.string(), "no scenarios found"});
        return report;
    }
    std::set<std::string> ids;
    for (const scenario::ConcreteScenario& s : db.scenarios) {
        const scenario::ValidationReport one = scenario::validate_concrete(s, registry);
        for (scenario::Violation v : one.violations) {
            v.path = s.id + "." + v.path;
            report.violations.push_back(std::move(v));
        }
        if (!ids.insert(s.id).second) {
            report.violations.push_back({"unique id", s.id, "duplicate scenario id"});
        }
        if (!s.test_request.empty() && db.test_requests.count(s.test_request) == 0) {
            report.violations.push_back({"resolvable test request", s.id + ".test_request",
                                         "'" + s.test_request + "' is not registered"});
        }
    }
    return report;
}

std::string database_content_hash(const ScenarioDatabase& db) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const scenario::ConcreteScenario& s : db.scenarios) {
        h = fnv1a(scenario::scenario_to_json(s), h);
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace cat::harness
