#include "coalp/cotree.hpp"

#include <algorithm>

#include "coalp/unify.hpp"

namespace coalp {

int CoTree::nodeCount() const {
    int n = 0;
    for (const auto& node : nodes) n += 1 + static_cast<int>(node.alts.size());
    return n;
}

namespace {

struct AltProto {
    int clauseIndex;
    Substitution matcher;
    std::vector<Atom> childAtoms;
};

struct ExpandInfo {
    std::vector<AltProto> alts;
    std::vector<int> candidates;
};

ExpandInfo expandAtom(const Program& p, const Atom& atom, int nodeId, const BuildOptions& opts) {
    ExpandInfo info;
    const int nClauses = static_cast<int>(p.clauses.size());
    for (int ci = 0; ci < nClauses; ++ci) {
        const int gen = opts.genBase + 1 + nodeId * nClauses + ci;
        Clause renamed = renameApart(p.clauses[ci], gen);
        if (auto sigma = termMatch(renamed.head, atom)) {
            AltProto alt;
            alt.clauseIndex = ci;
            alt.matcher = std::move(*sigma);
            alt.childAtoms.reserve(renamed.body.size());
            for (const auto& b : renamed.body) alt.childAtoms.push_back(applySubst(b, alt.matcher));
            info.alts.push_back(std::move(alt));
        }
    }
    if (info.alts.empty()) {
        for (int ci = 0; ci < nClauses; ++ci) {
            const int gen = opts.genBase + 1 + nodeId * nClauses + ci;
            Clause renamed = renameApart(p.clauses[ci], gen);
            if (unify(renamed.head, atom)) info.candidates.push_back(ci);
        }
    }
    return info;
}

int maxGenIn(const Atom& a) {
    int g = 0;
    for (const auto& v : variablesOf(a)) g = std::max(g, v.gen);
    return g;
}

}  // namespace

BuildResult buildCoTree(const Program& p, const Atom& goal, const BuildOptions& opts) {
    BuildResult res;
    CoTree& t = res.tree;
    t.nodes.push_back(CoTree::AndNode{goal, 0, -1, {}, {}, std::nullopt});
    res.maxGenUsed = std::max(opts.genBase, maxGenIn(goal));
    if (opts.onAndNode && !opts.onAndNode(t, 0)) {
        res.aborted = true;
        return res;
    }

    int count = 1;  // and-nodes plus or-nodes committed so far
    std::vector<int> frontier{0};

    while (!frontier.empty()) {
        const int n = static_cast<int>(frontier.size());
        std::vector<ExpandInfo> infos(n);
        auto task = [&](int i) { infos[i] = expandAtom(p, t.nodes[frontier[i]].atom, frontier[i], opts); };
        if (opts.pool && n >= opts.parallelThreshold) {
            opts.pool->run(n, task);
        } else {
            for (int i = 0; i < n; ++i) task(i);
        }

        int added = 0;
        for (const auto& info : infos) {
            for (const auto& alt : info.alts) added += 1 + static_cast<int>(alt.childAtoms.size());
        }
        if (count + added > opts.nodeBudget) {
            res.budgetExceeded = true;
            return res;  // level-complete prefix
        }

        std::vector<int> nextFrontier;
        for (int i = 0; i < n; ++i) {
            const int id = frontier[i];
            ExpandInfo& info = infos[i];
            if (info.alts.empty()) {
                t.nodes[id].candidates = std::move(info.candidates);
                continue;
            }
            for (AltProto& proto : info.alts) {
                CoTree::OrAlt alt;
                alt.clauseIndex = proto.clauseIndex;
                alt.matcher = std::move(proto.matcher);
                for (Atom& child : proto.childAtoms) {
                    const int childId = static_cast<int>(t.nodes.size());
                    res.maxGenUsed = std::max(res.maxGenUsed, maxGenIn(child));
                    t.nodes.push_back(CoTree::AndNode{std::move(child), t.nodes[id].level + 1, id,
                                                      {}, {}, std::nullopt});
                    alt.children.push_back(childId);
                    nextFrontier.push_back(childId);
                    if (opts.onAndNode && !opts.onAndNode(t, childId)) {
                        t.nodes[id].alts.push_back(std::move(alt));
                        res.aborted = true;
                        return res;
                    }
                }
                t.nodes[id].alts.push_back(std::move(alt));
            }
        }
        count += added;
        frontier = std::move(nextFrontier);
    }
    return res;
}

std::vector<OpenLeaf> openLeaves(const CoTree& t) {
    std::vector<OpenLeaf> out;
    for (int id = 0; id < static_cast<int>(t.nodes.size()); ++id) {
        if (t.isOpen(id)) out.push_back({id, t.nodes[id].atom, t.nodes[id].candidates});
    }
    return out;
}

namespace {

// canSucceed per and-node, bottom-up; BFS order guarantees children ids
// exceed the parent id. chosenAlt[id] = index into alts, or -1 for stubs.
void computeSuccess(const CoTree& t, std::vector<char>& can, std::vector<int>& chosen) {
    const int n = static_cast<int>(t.nodes.size());
    can.assign(n, 0);
    chosen.assign(n, -2);
    for (int id = n - 1; id >= 0; --id) {
        const auto& node = t.nodes[id];
        if (node.decided) {
            can[id] = *node.decided ? 1 : 0;
            chosen[id] = -1;
            continue;
        }
        for (size_t ai = 0; ai < node.alts.size(); ++ai) {
            bool ok = true;
            for (int c : node.alts[ai].children)
                if (!can[c]) {
                    ok = false;
                    break;
                }
            if (ok) {
                can[id] = 1;
                chosen[id] = static_cast<int>(ai);
                break;
            }
        }
    }
}

}  // namespace

std::optional<SubtreeSelection> findSuccessSubtree(const CoTree& t) {
    std::vector<char> can;
    std::vector<int> chosen;
    computeSuccess(t, can, chosen);
    if (!can[0]) return std::nullopt;
    SubtreeSelection sel;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        sel[id] = chosen[id];
        if (chosen[id] >= 0) {
            for (int c : t.nodes[id].alts[chosen[id]].children) stack.push_back(c);
        }
    }
    return sel;
}

bool potentiallySuccessful(const CoTree& t) {
    const int n = static_cast<int>(t.nodes.size());
    std::vector<char> ok(n, 0);
    for (int id = n - 1; id >= 0; --id) {
        const auto& node = t.nodes[id];
        if (node.decided) {
            ok[id] = *node.decided ? 1 : 0;
            continue;
        }
        if (node.alts.empty()) {
            // Open leaves may close later; matchless, ununifiable leaves
            // stay failed under every substitution.
            ok[id] = node.candidates.empty() ? 0 : 1;
            continue;
        }
        for (const auto& alt : node.alts) {
            bool all = true;
            for (int c : alt.children)
                if (!ok[c]) {
                    all = false;
                    break;
                }
            if (all) {
                ok[id] = 1;
                break;
            }
        }
    }
    return ok[0] != 0;
}

CoTree compactTree(const CoTree& t) {
    const int n = static_cast<int>(t.nodes.size());
    // hasOpen: subtree contains an open leaf.
    std::vector<char> hasOpen(n, 0);
    for (int id = n - 1; id >= 0; --id) {
        if (t.isOpen(id)) {
            hasOpen[id] = 1;
            continue;
        }
        for (const auto& alt : t.nodes[id].alts) {
            for (int c : alt.children)
                if (hasOpen[c]) hasOpen[id] = 1;
        }
    }
    std::vector<char> can;
    std::vector<int> chosen;
    computeSuccess(t, can, chosen);

    CoTree out;
    // BFS copy, turning closed subtrees into verdict stubs.
    struct Item {
        int oldId;
        int newParent;
    };
    std::vector<Item> queue{{0, -1}};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto [oldId, newParent] = queue[qi];
        const auto& node = t.nodes[oldId];
        CoTree::AndNode copy;
        copy.atom = node.atom;
        copy.level = node.level;
        copy.parent = newParent;
        const int newId = static_cast<int>(out.nodes.size());
        if (!hasOpen[oldId]) {
            copy.decided = can[oldId] != 0;
            out.nodes.push_back(std::move(copy));
        } else {
            copy.candidates = node.candidates;
            out.nodes.push_back(std::move(copy));
            for (const auto& alt : node.alts) {
                CoTree::OrAlt altCopy;
                altCopy.clauseIndex = alt.clauseIndex;
                altCopy.matcher = alt.matcher;
                for (int c : alt.children) {
                    // Children are appended later in BFS order; record the
                    // slot now and patch after the queue settles.
                    altCopy.children.push_back(-static_cast<int>(queue.size()) - 1);
                    queue.push_back({c, newId});
                }
                out.nodes[newId].alts.push_back(std::move(altCopy));
            }
        }
    }
    // Patch child ids: queue index i materialised as out node id i (the
    // copy order equals queue order).
    for (auto& node : out.nodes) {
        for (auto& alt : node.alts) {
            for (auto& c : alt.children) c = -c - 1;
        }
    }
    return out;
}

}  // namespace coalp
