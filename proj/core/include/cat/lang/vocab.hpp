#pragma once

#include <filesystem>
#include <set>
#include <string>

#include "cat/scenario/types.hpp"

namespace cat::lang {

/// Closed token vocabularies for layout classes, conflict types, and salient
/// factors. Maneuvers, locations, and actor kinds are fixed enums; these two
/// families stay extensible through config registration so enumeration
/// remains finite but ODD-specific tokens can be added.
class VocabRegistry {
public:
    static VocabRegistry bundled();
    static VocabRegistry from_json_file(const std::filesystem::path& path);

    void register_layout_class(std::string token);
    void register_conflict_type(std::string token);
    void register_salient_factor(std::string token);

    bool has_layout_class(std::string_view token) const;
    bool has_conflict_type(std::string_view token) const;
    bool has_salient_factor(std::string_view token) const;

    const std::set<std::string>& layout_classes() const { return layout_classes_; }
    const std::set<std::string>& conflict_types() const { return conflict_types_; }
    const std::set<std::string>& salient_factors() const { return salient_factors_; }

private:
    std::set<std::string> layout_classes_;
    std::set<std::string> conflict_types_;
    std::set<std::string> salient_factors_;
};

}  // namespace cat::lang
