#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coalp/cotree.hpp"
#include "coalp/guard.hpp"
#include "coalp/program.hpp"
#include "coalp/subst.hpp"

namespace coalp {

/// A node in the uniform-cost search over coinductive trees. The chain
/// records the per-step mgus (restricted to tree variables), and the
/// priority is the total binding count of the chain.
struct DerivationState {
    Atom rootAtom;
    CoTree tree;
    std::vector<Substitution> chain;
    int priority = 0;
    int gen = 0;       // highest renaming generation in use
    int64_t seq = 0;   // enqueue order; FIFO tie-break among equal priorities
};

struct Answer {
    std::vector<Substitution> chain;
    Atom rootAtom;          // the instantiated goal the success tree proves
    CoTree successTree;
    SubtreeSelection successSelection;
    int rank = 0;           // priority at emission
    Substitution solved;    // flattened chain restricted to the goal's variables
};

enum class DeriveStatus {
    Exhausted,    // search space fully explored
    AnswerLimit,  // maxAnswers reached
    StateLimit,   // maxStates expansions reached with work remaining
    NotGuarded,   // guard precheck failed and force was off
};

struct DeriveOptions {
    int maxAnswers = -1;   // < 0 means unbounded
    int maxStates = 100000;
    int nodeBudget = 10000;
    int workers = 1;
    bool ordered = true;   // kept for the CLI; the scheduler is already rank-ordered
    bool force = false;    // skip the guardedness precheck
    int parallelThreshold = 64;
};

struct DeriveResult {
    std::vector<Answer> answers;
    DeriveStatus status = DeriveStatus::Exhausted;
    int statesExpanded = 0;
    bool budgetExceeded = false;  // some tree rebuild hit the node budget
    std::optional<GuardReport> guardReport;  // present when the precheck ran
};

/// Expands one state: renames the candidate clause apart, unifies it with
/// the selected open leaf, and rebuilds the tree from the instantiated
/// root. Returns nullopt when unification fails.
std::optional<DerivationState> coinductiveStep(const Program& p, const DerivationState& s,
                                               int leafNodeId, int clauseIndex,
                                               const DeriveOptions& opts, bool* budgetHit);

/// One successor per candidate clause of the selected open leaf (the
/// leftmost leaf at the deepest level, the node "lowest in the tree");
/// empty when the tree has no open leaf. Dead successors are not
/// filtered here.
std::vector<DerivationState> expandState(const Program& p, const DerivationState& s,
                                         const DeriveOptions& opts, bool* budgetHit);

/// Uniform-cost coinductive derivation search: best-first on priority with
/// FIFO tie-break; states whose trees hold a success subtree emit an Answer
/// and are not expanded; dead states are discarded. Deterministic for any
/// worker count: equal-priority states are expanded as a batch and their
/// successors committed in parent order.
DeriveResult derive(const Program& p, const Atom& goal, const DeriveOptions& opts = {});

}  // namespace coalp
