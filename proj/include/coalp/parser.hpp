#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coalp/program.hpp"

namespace coalp {

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    std::string message;
};

struct ParseResult {
    std::optional<Program> program;  // absent iff an error diagnostic exists
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return program.has_value(); }
};

struct GoalResult {
    std::optional<Atom> goal;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return goal.has_value(); }
};

/// Prolog-style syntax: `h :- b1, ..., bn.` and facts `h.`; identifiers
/// starting with an uppercase letter or underscore are variables; `%`
/// starts a comment. Never throws: any input yields a program or
/// diagnostics.
ParseResult parseProgram(const std::string& text);

/// Goals are atomic; conjunctive goals are rejected with an explanation.
/// When `context` is given, symbol arities are checked against it.
GoalResult parseGoal(const std::string& text, const Program* context = nullptr);

/// Reads and parses a `.coalp` file; a missing file yields a diagnostic.
ParseResult parseProgramFile(const std::string& path);

}  // namespace coalp
