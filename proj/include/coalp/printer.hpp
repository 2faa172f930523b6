#pragma once

#include <set>
#include <string>
#include <vector>

#include "coalp/program.hpp"
#include "coalp/subst.hpp"

namespace coalp {

std::string toString(const TermPtr& t);
std::string toString(const Atom& a);
std::string toString(const Clause& c);
std::string toString(const Program& p);

/// "{x/cons(x1,y1), x1/0, y1/nil}" — bindings in order.
std::string toString(const Substitution& s);

/// Prints a triangular binding chain in binding order.
std::string formatAnswer(const std::vector<Substitution>& chain);

/// Solved form: the chain composed and restricted to the goal variables.
std::string formatSolved(const std::vector<Substitution>& chain,
                         const std::set<Var>& goalVars);

}  // namespace coalp
