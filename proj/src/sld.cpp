#include "coalp/sld.hpp"

#include "coalp/printer.hpp"
#include "coalp/unify.hpp"

namespace coalp {

std::optional<SldStepResult> sldStep(const GoalList& g, const Clause& renamed, int selectedIndex) {
    const Atom& selected = g[selectedIndex];
    auto theta = unify(selected, renamed.head);
    if (!theta) return std::nullopt;
    SldStepResult out;
    out.mgu = std::move(*theta);
    auto push = [&](const Atom& a) {
        Atom inst = applySubst(a, out.mgu);
        for (const auto& prev : out.resolvent)
            if (atomEq(prev, inst)) return;  // goals are atom sets
        out.resolvent.push_back(std::move(inst));
    };
    for (int i = 0; i < selectedIndex; ++i) push(g[i]);
    for (const auto& b : renamed.body) push(b);
    for (size_t i = selectedIndex + 1; i < g.size(); ++i) push(g[i]);
    return out;
}

namespace {

struct Solver {
    const Program& p;
    int maxDepth;
    int maxAnswers;
    std::set<Var> goalVars;
    SldSolveResult result;
    int gen = 0;
    bool stopped = false;  // cut branch reached or answer limit

    void search(const GoalList& g, const Substitution& acc, int depth) {
        if (stopped) return;
        if (g.empty()) {
            result.answers.push_back(restrictTo(acc, goalVars));
            if (maxAnswers >= 0 && static_cast<int>(result.answers.size()) >= maxAnswers)
                stopped = true;
            return;
        }
        if (depth >= maxDepth) {
            // A real Prolog run would sit in this branch forever; every
            // alternative after it is unreachable.
            result.depthExhausted = true;
            stopped = true;
            return;
        }
        for (int ci = 0; ci < static_cast<int>(p.clauses.size()); ++ci) {
            Clause renamed = renameApart(p.clauses[ci], ++gen);
            auto step = sldStep(g, renamed, 0);
            if (!step) continue;
            search(step->resolvent, compose(acc, step->mgu), depth + 1);
            if (stopped) return;
        }
    }
};

}  // namespace

SldSolveResult sldSolve(const Program& p, const GoalList& g, int maxDepth, int maxAnswers) {
    Solver s{p, maxDepth, maxAnswers};
    for (const auto& a : g) collectVars(a, s.goalVars);
    s.search(g, Substitution{}, 0);
    return s.result;
}

SldTree buildSldTree(const Program& p, const GoalList& g, int maxDepth) {
    SldTree t;
    t.nodes.push_back({g, SldTree::Kind::Inner, 0, {}});
    int gen = 0;
    // Children ids exceed parents; expand in creation order.
    for (size_t id = 0; id < t.nodes.size(); ++id) {
        GoalList goal = t.nodes[id].goal;
        int depth = t.nodes[id].depth;
        if (goal.empty()) {
            t.nodes[id].kind = SldTree::Kind::Success;
            continue;
        }
        if (depth >= maxDepth) {
            t.nodes[id].kind = SldTree::Kind::Open;
            continue;
        }
        std::vector<SldTree::Edge> edges;
        for (int ci = 0; ci < static_cast<int>(p.clauses.size()); ++ci) {
            Clause renamed = renameApart(p.clauses[ci], ++gen);
            auto step = sldStep(goal, renamed, 0);
            if (!step) continue;
            int child = static_cast<int>(t.nodes.size());
            t.nodes.push_back({step->resolvent, SldTree::Kind::Inner, depth + 1, {}});
            edges.push_back({ci, step->mgu, child});
        }
        if (edges.empty())
            t.nodes[id].kind = SldTree::Kind::Failure;
        else
            t.nodes[id].children = std::move(edges);
    }
    return t;
}

bool HerbrandInterpretation::contains(const Atom& a) const {
    return atoms.count(toString(a)) != 0;
}

HerbrandInterpretation groundTp(const Program& p) {
    if (!p.isGround()) throw NonGroundError("groundTp requires a ground program");
    HerbrandInterpretation interp;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : p.clauses) {
            bool bodyIn = true;
            for (const auto& b : c.body)
                if (!interp.contains(b)) {
                    bodyIn = false;
                    break;
                }
            if (bodyIn && interp.atoms.insert(toString(c.head)).second) changed = true;
        }
    }
    return interp;
}

AndOrTree buildAndOrTree(const Program& p, const Atom& goal, int maxDepth) {
    if (!p.isGround()) throw NonGroundError("and-or trees are defined over ground programs");
    AndOrTree t;
    t.nodes.push_back({goal, false, -1, {}, {}});
    std::vector<int> depth{0};
    for (size_t id = 0; id < t.nodes.size(); ++id) {
        if (depth[id] >= maxDepth) continue;
        Atom atom = t.nodes[id].atom;
        std::vector<int> matching;
        for (int ci = 0; ci < static_cast<int>(p.clauses.size()); ++ci) {
            if (unify(p.clauses[ci].head, atom)) matching.push_back(ci);
        }
        auto addChildren = [&](int ci, std::vector<int>& out) {
            auto theta = unify(p.clauses[ci].head, atom);
            for (const auto& b : p.clauses[ci].body) {
                int child = static_cast<int>(t.nodes.size());
                t.nodes.push_back({applySubst(b, *theta), false, -1, {}, {}});
                depth.push_back(depth[id] + 1);
                out.push_back(child);
            }
        };
        if (matching.size() == 1) {
            t.nodes[id].direct = true;
            t.nodes[id].directClause = matching[0];
            std::vector<int> kids;
            addChildren(matching[0], kids);
            t.nodes[id].directChildren = std::move(kids);
        } else if (matching.size() > 1) {
            for (int ci : matching) {
                AndOrTree::OrAlt alt;
                alt.clauseIndex = ci;
                addChildren(ci, alt.children);
                t.nodes[id].alts.push_back(std::move(alt));
            }
        }
    }
    return t;
}

namespace {

bool andOrSuccessAt(const AndOrTree& t, int id) {
    const auto& n = t.nodes[id];
    if (n.direct) {
        for (int c : n.directChildren)
            if (!andOrSuccessAt(t, c)) return false;
        return true;
    }
    for (const auto& alt : n.alts) {
        bool all = true;
        for (int c : alt.children)
            if (!andOrSuccessAt(t, c)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

}  // namespace

bool andOrSuccess(const AndOrTree& t) {
    return !t.nodes.empty() && andOrSuccessAt(t, 0);
}

namespace {

PlainTree plainOfAndOr(const AndOrTree& t, int id) {
    const auto& n = t.nodes[id];
    PlainTree out;
    out.label = toString(n.atom);
    if (n.direct) {
        if (n.directChildren.empty()) {
            out.children.push_back({"[]", {}});
        } else {
            for (int c : n.directChildren) out.children.push_back(plainOfAndOr(t, c));
        }
    } else {
        for (const auto& alt : n.alts) {
            PlainTree orNode{"*", {}};
            if (alt.children.empty()) {
                orNode.children.push_back({"[]", {}});
            } else {
                for (int c : alt.children) orNode.children.push_back(plainOfAndOr(t, c));
            }
            out.children.push_back(std::move(orNode));
        }
    }
    return out;
}

PlainTree plainOfCo(const CoTree& t, int id) {
    const auto& n = t.nodes[id];
    PlainTree out;
    out.label = toString(n.atom);
    if (n.alts.size() == 1) {
        if (n.alts[0].children.empty()) {
            out.children.push_back({"[]", {}});
        } else {
            for (int c : n.alts[0].children) out.children.push_back(plainOfCo(t, c));
        }
    } else {
        for (const auto& alt : n.alts) {
            PlainTree orNode{"*", {}};
            if (alt.children.empty()) {
                orNode.children.push_back({"[]", {}});
            } else {
                for (int c : alt.children) orNode.children.push_back(plainOfCo(t, c));
            }
            out.children.push_back(std::move(orNode));
        }
    }
    return out;
}

}  // namespace

PlainTree toPlain(const AndOrTree& t) { return plainOfAndOr(t, 0); }

PlainTree toPlainElided(const CoTree& t) { return plainOfCo(t, 0); }

bool plainEq(const PlainTree& a, const PlainTree& b) {
    if (a.label != b.label) return false;
    if (a.children.size() != b.children.size()) return false;
    for (size_t i = 0; i < a.children.size(); ++i)
        if (!plainEq(a.children[i], b.children[i])) return false;
    return true;
}

}  // namespace coalp
