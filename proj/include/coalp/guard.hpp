#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coalp/program.hpp"

namespace coalp {

struct CheckResult {
    bool ok = true;
    std::string message;
};

/// Presence of constructors: a clause recursing on its own head predicate
/// must carry a function symbol (constants count) in some head argument.
CheckResult check1(const Clause& c);

/// Constructor reduction: every body atom on the head's predicate must
/// reduce some function symbol at some argument position, with the
/// variable side-conditions on that position.
CheckResult check2(const Clause& c);

struct Check3Result {
    bool ok = true;
    /// Clause whose head tree exposed the unguarded loop.
    int clauseIndex = -1;
    /// Head and tail loop factors Q(t),Q(t') when a loop failed the checks.
    std::optional<std::pair<Atom, Atom>> loopFactors;
    std::string message;
    bool budgetExceeded = false;
};

/// Non-guarded loop detection: builds the coinductive tree for every
/// clause head, applying checks 1 and 2 to each same-predicate
/// ancestor/descendant pair along the construction paths. Budget
/// exhaustion is a conservative rejection.
Check3Result check3(const Program& p, int nodeBudget = 10000);

struct ClauseVerdict {
    int clauseIndex = 0;
    int failedCheck = 0;  // 0 = pass; 1, 2, or 3 otherwise
    std::string message;
};

struct GuardReport {
    bool guarded = false;
    std::vector<ClauseVerdict> clauseResults;
    std::optional<std::pair<Atom, Atom>> loopFactors;
    std::vector<std::string> warnings;
    bool budgetExceeded = false;
};

GuardReport guardProgram(const Program& p, int nodeBudget = 10000);

std::string formatReport(const GuardReport& r);

}  // namespace coalp
