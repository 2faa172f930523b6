#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "coalp/pool.hpp"
#include "coalp/program.hpp"
#include "coalp/subst.hpp"

namespace coalp {

/// Alternating and/or tree. And-nodes are stored in one vector in BFS
/// order (level, then left to right), so node ids double as the frontier
/// ordering. Each or-alternative records the clause it came from and the
/// term-matcher used, so parent atom == head*matcher holds by construction.
struct CoTree {
    struct OrAlt {
        int clauseIndex = -1;
        Substitution matcher;
        std::vector<int> children;  // and-node ids; empty == unit clause (box)
    };
    struct AndNode {
        Atom atom;
        int level = 0;
        int parent = -1;  // parent and-node id; -1 at root
        std::vector<OrAlt> alts;
        // Clause indices whose heads unify (but do not match) the atom;
        // only meaningful when alts is empty.
        std::vector<int> candidates;
        // Set by compactTree on fully closed subtrees: cached success
        // verdict, with alts dropped.
        std::optional<bool> decided;
    };

    std::vector<AndNode> nodes;

    const Atom& rootAtom() const { return nodes.front().atom; }
    bool isLeaf(int id) const { return nodes[id].alts.empty() && !nodes[id].decided; }
    bool isOpen(int id) const {
        return nodes[id].alts.empty() && !nodes[id].decided && !nodes[id].candidates.empty();
    }
    /// And-nodes plus or-nodes.
    int nodeCount() const;
};

struct BuildOptions {
    int nodeBudget = 10000;
    /// Generations strictly above this value are free for renaming.
    int genBase = 0;
    WorkerPool* pool = nullptr;
    /// Frontier size at which branch construction goes parallel.
    int parallelThreshold = 64;
    /// Invoked for every new and-node (after its level is committed);
    /// return false to abort construction. Used by the guardedness checks.
    std::function<bool(const CoTree&, int)> onAndNode;
};

struct BuildResult {
    CoTree tree;
    bool budgetExceeded = false;
    bool aborted = false;  // onAndNode asked to stop
    int maxGenUsed = 0;
};

/// Breadth-first construction per the coinductive-tree rules: every clause
/// whose renamed head term-matches an and-node's atom contributes an
/// or-alternative; matchless nodes that still unify with some head are
/// recorded open. Stops level-complete when the and+or node count would
/// pass the budget.
BuildResult buildCoTree(const Program& p, const Atom& goal, const BuildOptions& opts = {});

struct OpenLeaf {
    int nodeId;
    Atom atom;
    std::vector<int> candidateClauses;
};

/// Open leaves in ascending level then left-to-right order.
std::vector<OpenLeaf> openLeaves(const CoTree& t);

/// Per retained and-node, the index (into alts) of the single retained
/// or-child; -1 marks a compaction stub whose success was cached.
using SubtreeSelection = std::map<int, int>;

/// Success subtree: one or-child per and-node, all children of retained
/// or-nodes retained, every retained path ending in a unit-clause box.
/// Prefers the lowest clause index, so the witness is deterministic.
std::optional<SubtreeSelection> findSuccessSubtree(const CoTree& t);

/// True if some extension of the tree by leaf substitutions could still
/// contain a success subtree (open leaves count as potential successes).
/// States whose trees fail this are dead and get discarded by the engine.
bool potentiallySuccessful(const CoTree& t);

/// Collapses fully closed subtrees (no open leaves) into cached verdict
/// stubs. Preserves findSuccessSubtree's verdict and openLeaves exactly.
CoTree compactTree(const CoTree& t);

}  // namespace coalp
