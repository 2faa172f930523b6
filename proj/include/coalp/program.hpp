#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "coalp/term.hpp"

namespace coalp {

/// Horn clause head :- body. Body atoms are pairwise distinct.
struct Clause {
    Atom head;
    std::vector<Atom> body;
};

/// A loaded program: clauses in source order plus the inferred signature.
/// Function and predicate symbols live in separate namespaces; within each,
/// a name has exactly one arity.
struct Program {
    std::vector<Clause> clauses;
    std::map<std::string, int> predArity;
    std::map<std::string, int> funcArity;

    bool isGround() const;
};

/// Replaces every variable of c by the same-named variable at generation g.
Clause renameApart(const Clause& c, int freshGeneration);

std::set<Var> variablesOf(const Clause& c);

}  // namespace coalp
