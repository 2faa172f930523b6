#include "coalp/derive.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>

#include "coalp/printer.hpp"
#include "coalp/unify.hpp"

namespace coalp {

namespace {

std::set<Var> treeVariables(const CoTree& t) {
    std::set<Var> vars;
    for (const auto& n : t.nodes) collectVars(n.atom, vars);
    return vars;
}

int maxGenIn(const std::set<Var>& vars) {
    int g = 0;
    for (const auto& v : vars) g = std::max(g, v.gen);
    return g;
}

}  // namespace

std::optional<DerivationState> coinductiveStep(const Program& p, const DerivationState& s,
                                               int leafNodeId, int clauseIndex,
                                               const DeriveOptions& opts, bool* budgetHit) {
    const Atom& leafAtom = s.tree.nodes[leafNodeId].atom;
    int renameGen = s.gen + 1;
    Clause variant = renameApart(p.clauses[clauseIndex], renameGen);
    auto theta = unify(leafAtom, variant.head);
    if (!theta) return std::nullopt;

    DerivationState next;
    next.rootAtom = applySubst(s.rootAtom, *theta);

    Substitution step = restrictTo(*theta, treeVariables(s.tree));
    next.chain = s.chain;
    next.chain.push_back(step);
    next.priority = s.priority + static_cast<int>(step.size());

    BuildOptions bo;
    bo.nodeBudget = opts.nodeBudget;
    bo.genBase = renameGen;
    bo.parallelThreshold = opts.parallelThreshold;
    BuildResult br = buildCoTree(p, next.rootAtom, bo);
    if (br.budgetExceeded && budgetHit) *budgetHit = true;
    next.gen = std::max({renameGen, br.maxGenUsed, maxGenIn(variablesOf(next.rootAtom))});
    next.tree = compactTree(br.tree);
    return next;
}

std::vector<DerivationState> expandState(const Program& p, const DerivationState& s,
                                         const DeriveOptions& opts, bool* budgetHit) {
    std::vector<DerivationState> out;
    auto leaves = openLeaves(s.tree);
    if (leaves.empty()) return out;
    // Leftmost open leaf at the lowest level (openLeaves is sorted by
    // level, then left to right). Selecting shallow leaves first keeps
    // failing constraints near the root live, so dead states are detected
    // instead of diving down an unconstrained branch forever.
    const OpenLeaf& leaf = leaves.front();
    for (int ci : leaf.candidateClauses) {
        auto next = coinductiveStep(p, s, leaf.nodeId, ci, opts, budgetHit);
        if (next) out.push_back(std::move(*next));
    }
    return out;
}

DeriveResult derive(const Program& p, const Atom& goal, const DeriveOptions& opts) {
    DeriveResult result;

    if (!opts.force) {
        GuardReport report = guardProgram(p, opts.nodeBudget);
        bool guarded = report.guarded;
        result.guardReport = std::move(report);
        if (!guarded) {
            result.status = DeriveStatus::NotGuarded;
            return result;
        }
    }

    WorkerPool pool(std::max(1, opts.workers));
    std::set<Var> goalVars = variablesOf(goal);

    // Initial state.
    DerivationState init;
    init.rootAtom = goal;
    {
        BuildOptions bo;
        bo.nodeBudget = opts.nodeBudget;
        bo.genBase = 0;
        bo.pool = &pool;
        bo.parallelThreshold = opts.parallelThreshold;
        BuildResult br = buildCoTree(p, goal, bo);
        result.budgetExceeded = result.budgetExceeded || br.budgetExceeded;
        init.gen = std::max(br.maxGenUsed, maxGenIn(goalVars));
        init.tree = compactTree(br.tree);
    }

    // Priority queue ordered by (priority, seq); FIFO among equal
    // priorities via the monotone sequence number.
    auto cmp = [](const DerivationState& a, const DerivationState& b) {
        if (a.priority != b.priority) return a.priority > b.priority;
        return a.seq > b.seq;
    };
    std::priority_queue<DerivationState, std::vector<DerivationState>, decltype(cmp)> queue(cmp);
    int64_t nextSeq = 0;

    if (potentiallySuccessful(init.tree)) {
        init.seq = nextSeq++;
        queue.push(std::move(init));
    }

    std::unordered_set<std::string> seenSolved;

    while (!queue.empty()) {
        // The tie group: every queued state at the minimal priority, in
        // enqueue order. Expanding it as one batch with successors
        // committed in parent order makes the search order independent of
        // the worker count (successor priorities strictly dominate within
        // guarded programs; equal-priority successors get later seqs).
        std::vector<DerivationState> group;
        int minPriority = queue.top().priority;
        while (!queue.empty() && queue.top().priority == minPriority) {
            group.push_back(queue.top());
            queue.pop();
        }

        // Answers first: a success state is popped before any of its
        // peers' successors (those carry later sequence numbers).
        std::vector<int> toExpand;
        for (int i = 0; i < static_cast<int>(group.size()); ++i) {
            auto selection = findSuccessSubtree(group[i].tree);
            if (selection) {
                std::string solved = formatSolved(group[i].chain, goalVars);
                if (seenSolved.insert(solved).second) {
                    Answer a;
                    a.chain = group[i].chain;
                    a.rootAtom = group[i].rootAtom;
                    // Store the uncompacted success tree: state trees are
                    // compacted, which hides the witness structure.
                    BuildOptions bo;
                    bo.nodeBudget = opts.nodeBudget;
                    bo.genBase = group[i].gen;
                    a.successTree = buildCoTree(p, group[i].rootAtom, bo).tree;
                    auto fullSelection = findSuccessSubtree(a.successTree);
                    a.successSelection = fullSelection ? *fullSelection : *selection;
                    a.rank = group[i].priority;
                    a.solved = restrictTo(flattenChain(a.chain), goalVars);
                    result.answers.push_back(std::move(a));
                    if (opts.maxAnswers >= 0 &&
                        static_cast<int>(result.answers.size()) >= opts.maxAnswers) {
                        result.status = DeriveStatus::AnswerLimit;
                        return result;
                    }
                }
                continue;  // success states are not expanded
            }
            toExpand.push_back(i);
        }

        bool truncated = false;
        int allowance = opts.maxStates - result.statesExpanded;
        if (static_cast<int>(toExpand.size()) > allowance) {
            toExpand.resize(std::max(0, allowance));
            truncated = true;
        }

        // Level-2 parallelism: expand the batch concurrently, results
        // slotted by index; then commit in parent order.
        std::vector<std::vector<DerivationState>> successors(toExpand.size());
        std::vector<char> budgetFlags(std::max<size_t>(1, toExpand.size()), 0);
        pool.run(static_cast<int>(toExpand.size()), [&](int i) {
            bool hit = false;
            successors[i] = expandState(p, group[toExpand[i]], opts, &hit);
            budgetFlags[i] = hit ? 1 : 0;
        });
        result.statesExpanded += static_cast<int>(toExpand.size());

        for (size_t i = 0; i < toExpand.size(); ++i) {
            if (budgetFlags[i]) result.budgetExceeded = true;
            for (auto& succ : successors[i]) {
                if (!potentiallySuccessful(succ.tree)) continue;  // dead state
                succ.seq = nextSeq++;
                queue.push(std::move(succ));
            }
        }

        if (truncated || (result.statesExpanded >= opts.maxStates && !queue.empty())) {
            result.status = DeriveStatus::StateLimit;
            return result;
        }
    }

    result.status = DeriveStatus::Exhausted;
    return result;
}

}  // namespace coalp
