#pragma once

#include <stdexcept>
#include <string>

namespace cat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse diagnostics carry the 1-based source position.
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, int line, int col)
        : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line), col(col) {}
    int line;
    int col;
};

struct UnknownToken : Error {
    UnknownToken(const std::string& token, const std::string& category, int line, int col)
        : Error("unknown " + category + " token '" + token + "' at " + std::to_string(line) +
                ":" + std::to_string(col)),
          token(token), line(line), col(col) {}
    std::string token;
    int line;
    int col;
};

struct UnmappedConflict : Error { using Error::Error; };
struct EmptyRange : Error { using Error::Error; };
struct LayoutUnavailable : Error { using Error::Error; };
struct DegenerateSpeed : Error { using Error::Error; };
struct NonPositiveIntercept : Error { using Error::Error; };
struct SeparatingBodies : Error { using Error::Error; };
struct NotVruClass : Error { using Error::Error; };
struct PointOutsideFootprint : Error { using Error::Error; };
struct UnmatchedScenario : Error { using Error::Error; };
struct DatabaseMismatch : Error { using Error::Error; };
struct IoFailure : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace cat
