#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "cat/lang/vocab.hpp"
#include "cat/scenario/types.hpp"

namespace cat::lang {

struct SourcePos {
    int line = 0;
    int col = 0;
};

/// Parse result: the functional scenario plus its logical parameter ranges.
/// Fixed-value parameters become single-point ranges. Statement positions are
/// retained for diagnostics.
struct ParsedScenario {
    scenario::LogicalScenario logical;
    std::map<std::string, SourcePos> positions;

    const scenario::FunctionalScenario& functional() const { return logical.functional; }
};

/// Parses one scenario block. Throws SyntaxError (with line/column) on
/// malformed input and UnknownToken for out-of-vocabulary tokens.
ParsedScenario parse_functional(std::string_view source, const VocabRegistry& vocab);

/// Parses a .scn file, which may hold several scenario blocks.
std::vector<ParsedScenario> parse_scn(std::string_view source, const VocabRegistry& vocab);
std::vector<ParsedScenario> parse_scn_file(const std::filesystem::path& path,
                                           const VocabRegistry& vocab);

/// Canonical DSL text; parse(serialize(x)) reproduces x's semantic content.
std::string serialize_functional(const scenario::LogicalScenario& logical);

}  // namespace cat::lang
