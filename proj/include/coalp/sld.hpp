#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalp/cotree.hpp"
#include "coalp/program.hpp"
#include "coalp/subst.hpp"

namespace coalp {

/// Goal as a list of distinct atoms; empty means the box.
using GoalList = std::vector<Atom>;

class NonGroundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SldStepResult {
    GoalList resolvent;
    Substitution mgu;
};

/// One resolution step against an already-renamed clause. Duplicate atoms
/// in the resolvent are collapsed.
std::optional<SldStepResult> sldStep(const GoalList& g, const Clause& renamed, int selectedIndex);

struct SldSolveResult {
    std::vector<Substitution> answers;  // composed, restricted to goal vars
    bool depthExhausted = false;
};

/// Prolog-order search: leftmost selection, clause order, depth first.
/// A branch cut at maxDepth models divergence: enumeration stops there
/// (it is not treated as a failure to backtrack through), so left
/// recursion yields zero answers, exactly like a looping Prolog run.
SldSolveResult sldSolve(const Program& p, const GoalList& g, int maxDepth, int maxAnswers);

struct SldTree {
    enum class Kind { Inner, Success, Failure, Open };
    struct Edge {
        int clauseIndex;
        Substitution mgu;
        int child;
    };
    struct Node {
        GoalList goal;
        Kind kind = Kind::Inner;
        int depth = 0;
        std::vector<Edge> children;
    };
    std::vector<Node> nodes;  // node 0 is the root
};

/// Full SLD-tree with leftmost selection, truncated at maxDepth
/// (resolution steps); truncated nodes are marked Open.
SldTree buildSldTree(const Program& p, const GoalList& g, int maxDepth);

/// Subset of the Herbrand base, keyed by canonical atom text.
struct HerbrandInterpretation {
    std::set<std::string> atoms;
    bool contains(const Atom& a) const;
};

/// Least fixed point of the immediate-consequence operator. Requires a
/// syntactically ground program; throws NonGroundError otherwise.
HerbrandInterpretation groundTp(const Program& p);

/// And-or parallel derivation tree over a ground program.
struct AndOrTree {
    struct OrAlt {
        int clauseIndex;
        std::vector<int> children;  // and-node ids; empty == box
    };
    struct AndNode {
        Atom atom;
        // Single matching clause: children attach directly (elided or).
        // Multiple matches: one OrAlt per clause.
        bool direct = false;
        int directClause = -1;
        std::vector<int> directChildren;
        std::vector<OrAlt> alts;
    };
    std::vector<AndNode> nodes;
};

AndOrTree buildAndOrTree(const Program& p, const Atom& goal, int maxDepth);

/// True when some or-choice closes every and-branch of the tree.
bool andOrSuccess(const AndOrTree& t);

/// Order-insensitive structural comparison shape, shared by the and-or
/// tree and the or-chain-elided coinductive tree.
struct PlainTree {
    std::string label;  // atom text; "*" for or-nodes; "[]" for boxes
    std::vector<PlainTree> children;
};

PlainTree toPlain(const AndOrTree& t);

/// Coinductive tree with single-or-node chains elided; on ground programs
/// this coincides with the and-or parallel derivation tree.
PlainTree toPlainElided(const CoTree& t);

bool plainEq(const PlainTree& a, const PlainTree& b);

}  // namespace coalp
