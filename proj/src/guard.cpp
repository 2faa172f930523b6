#include "coalp/guard.hpp"

#include <set>
#include <sstream>

#include "coalp/cotree.hpp"
#include "coalp/printer.hpp"

namespace coalp {

namespace {

bool sameRecursivePred(const Clause& c, const Atom& b) { return b.pred == c.head.pred; }

// Function symbols occurring anywhere in t, in first-occurrence order.
void collectSymbols(const TermPtr& t, std::vector<Symbol>& out) {
    if (t->isVar()) return;
    bool seen = false;
    for (const auto& s : out)
        if (s == t->fn()) {
            seen = true;
            break;
        }
    if (!seen) out.push_back(t->fn());
    for (const auto& a : t->args()) collectSymbols(a, out);
}

bool isSubset(const std::set<Var>& a, const std::set<Var>& b) {
    for (const auto& v : a)
        if (!b.count(v)) return false;
    return true;
}

// The constructor-reduction condition for one (head arg, body arg, symbol).
bool reducesAt(const TermPtr& headArg, const TermPtr& bodyArg, const Symbol& f) {
    const int m = countSymbol(headArg, f);
    if (m < 1) return false;
    const int k = countSymbol(bodyArg, f);
    if (k >= m) return false;
    if (k > 0) {
        return isSubset(varsUnderSymbol(bodyArg, f), varsUnderSymbol(headArg, f));
    }
    // f vanished: every variable of the body argument must come from the
    // head argument.
    return isSubset(variablesOf(bodyArg), variablesOf(headArg));
}

CheckResult check2Pair(const Atom& head, const Atom& bodyAtom) {
    for (size_t i = 0; i < head.args.size(); ++i) {
        std::vector<Symbol> syms;
        collectSymbols(head.args[i], syms);
        for (const auto& f : syms) {
            if (reducesAt(head.args[i], bodyAtom.args[i], f)) return {true, ""};
        }
    }
    std::ostringstream os;
    os << "no constructor reduces from " << toString(head) << " to " << toString(bodyAtom);
    return {false, os.str()};
}

}  // namespace

CheckResult check1(const Clause& c) {
    bool recursive = false;
    for (const auto& b : c.body)
        if (sameRecursivePred(c, b)) recursive = true;
    if (!recursive) return {true, ""};
    for (const auto& t : c.head.args)
        if (containsFunctionSymbol(t)) return {true, ""};
    std::ostringstream os;
    os << "head " << toString(c.head) << " recurses without a constructor in any argument";
    return {false, os.str()};
}

CheckResult check2(const Clause& c) {
    for (const auto& b : c.body) {
        if (!sameRecursivePred(c, b)) continue;
        auto r = check2Pair(c.head, b);
        if (!r.ok) return r;
    }
    return {true, ""};
}

Check3Result check3(const Program& p, int nodeBudget) {
    Check3Result res;
    for (int ci = 0; ci < static_cast<int>(p.clauses.size()); ++ci) {
        Check3Result local;
        local.ok = true;
        BuildOptions opts;
        opts.nodeBudget = nodeBudget;
        opts.onAndNode = [&](const CoTree& t, int id) {
            const Atom& tail = t.nodes[id].atom;
            // Walk the and-ancestor chain, nearest first; every
            // same-predicate pair is a loop whose synthetic clause must
            // itself be guarded.
            for (int anc = t.nodes[id].parent; anc >= 0; anc = t.nodes[anc].parent) {
                const Atom& headFactor = t.nodes[anc].atom;
                if (headFactor.pred != tail.pred) continue;
                Clause synthetic{headFactor, {tail}};
                auto r1 = check1(synthetic);
                auto r2 = r1.ok ? check2(synthetic) : CheckResult{true, ""};
                if (!r1.ok || !r2.ok) {
                    local.ok = false;
                    local.clauseIndex = ci;
                    local.loopFactors = {headFactor, tail};
                    std::ostringstream os;
                    os << "unguarded loop " << toString(headFactor) << " -> " << toString(tail)
                       << ": " << (r1.ok ? r2.message : r1.message);
                    local.message = os.str();
                    return false;
                }
            }
            return true;
        };
        BuildResult b = buildCoTree(p, p.clauses[ci].head, opts);
        if (!local.ok) return local;
        if (b.budgetExceeded) {
            res.ok = false;
            res.clauseIndex = ci;
            res.budgetExceeded = true;
            std::ostringstream os;
            os << "coinductive tree for " << toString(p.clauses[ci].head)
               << " exceeded the node budget: possible unguarded recursion beyond budget";
            res.message = os.str();
            return res;
        }
    }
    return res;
}

GuardReport guardProgram(const Program& p, int nodeBudget) {
    GuardReport rep;
    bool allPass = true;
    for (int ci = 0; ci < static_cast<int>(p.clauses.size()); ++ci) {
        ClauseVerdict v;
        v.clauseIndex = ci;
        auto r1 = check1(p.clauses[ci]);
        if (!r1.ok) {
            v.failedCheck = 1;
            v.message = r1.message;
            allPass = false;
        } else {
            auto r2 = check2(p.clauses[ci]);
            if (!r2.ok) {
                v.failedCheck = 2;
                v.message = r2.message;
                allPass = false;
            }
        }
        rep.clauseResults.push_back(std::move(v));
    }
    if (allPass) {
        auto r3 = check3(p, nodeBudget);
        if (!r3.ok) {
            allPass = false;
            rep.budgetExceeded = r3.budgetExceeded;
            rep.loopFactors = r3.loopFactors;
            if (r3.clauseIndex >= 0 && r3.clauseIndex < static_cast<int>(rep.clauseResults.size())) {
                rep.clauseResults[r3.clauseIndex].failedCheck = 3;
                rep.clauseResults[r3.clauseIndex].message = r3.message;
            }
        }
    }
    rep.guarded = allPass;

    // Mutual recursion across two or more predicates gets only the loop
    // check above; warn that deeper goal-driven analysis is not attempted.
    std::set<std::string> preds;
    for (const auto& c : p.clauses) {
        for (const auto& b : c.body) {
            if (b.pred != c.head.pred) {
                for (const auto& c2 : p.clauses) {
                    if (c2.head.pred == b.pred) {
                        for (const auto& b2 : c2.body) {
                            if (b2.pred == c.head.pred) preds.insert(c.head.pred.name);
                        }
                    }
                }
            }
        }
    }
    for (const auto& name : preds)
        rep.warnings.push_back("mutual recursion through predicate '" + name +
                               "': guardedness is checked on clause heads only");
    return rep;
}

std::string formatReport(const GuardReport& r) {
    std::ostringstream os;
    os << (r.guarded ? "GUARDED" : "NOT GUARDED") << '\n';
    for (const auto& v : r.clauseResults) {
        os << "  clause " << v.clauseIndex << ": ";
        if (v.failedCheck == 0)
            os << "ok";
        else
            os << "fails check " << v.failedCheck << " (" << v.message << ")";
        os << '\n';
    }
    if (r.loopFactors) {
        os << "  loop factors: " << toString(r.loopFactors->first) << " -> "
           << toString(r.loopFactors->second) << '\n';
    }
    for (const auto& w : r.warnings) os << "  warning: " << w << '\n';
    return os.str();
}

}  // namespace coalp
