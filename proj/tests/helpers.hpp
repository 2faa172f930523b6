#pragma once

#include <stdexcept>
#include <string>

#include "coalp/parser.hpp"
#include "coalp/program.hpp"

namespace testutil {

inline std::string fixturePath(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name + ".coalp";
}

inline coalp::Program loadFixture(const std::string& name) {
    coalp::ParseResult r = coalp::parseProgramFile(fixturePath(name));
    if (!r.ok()) {
        std::string msg = "failed to load fixture " + name;
        for (const auto& d : r.diagnostics) msg += "; " + d.message;
        throw std::runtime_error(msg);
    }
    return *r.program;
}

inline coalp::Atom goal(const std::string& text, const coalp::Program& p) {
    coalp::GoalResult r = coalp::parseGoal(text, &p);
    if (!r.ok()) throw std::runtime_error("bad goal: " + text);
    return *r.goal;
}

}  // namespace testutil
