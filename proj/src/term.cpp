#include "coalp/term.hpp"

#include <cassert>

namespace coalp {

std::string displayName(const Var& v) {
    if (v.gen == 0) return v.name;
    return v.name + std::to_string(v.gen);
}

TermPtr Term::makeVar(Var v) {
    auto t = std::shared_ptr<Term>(new Term());
    t->isVar_ = true;
    t->var_ = std::move(v);
    return t;
}

TermPtr Term::makeApp(Symbol f, std::vector<TermPtr> args) {
    assert(static_cast<int>(args.size()) == f.arity);
    auto t = std::shared_ptr<Term>(new Term());
    t->isVar_ = false;
    t->fn_ = std::move(f);
    t->args_ = std::move(args);
    return t;
}

bool termEq(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->isVar() != b->isVar()) return false;
    if (a->isVar()) return a->var() == b->var();
    if (a->fn() != b->fn()) return false;
    for (size_t i = 0; i < a->args().size(); ++i)
        if (!termEq(a->args()[i], b->args()[i])) return false;
    return true;
}

bool atomEq(const Atom& a, const Atom& b) {
    if (a.pred != b.pred) return false;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!termEq(a.args[i], b.args[i])) return false;
    return true;
}

bool isGround(const TermPtr& t) {
    if (t->isVar()) return false;
    for (const auto& a : t->args())
        if (!isGround(a)) return false;
    return true;
}

bool isGround(const Atom& a) {
    for (const auto& t : a.args)
        if (!isGround(t)) return false;
    return true;
}

void collectVars(const TermPtr& t, std::set<Var>& out) {
    if (t->isVar()) {
        out.insert(t->var());
        return;
    }
    for (const auto& a : t->args()) collectVars(a, out);
}

void collectVars(const Atom& a, std::set<Var>& out) {
    for (const auto& t : a.args) collectVars(t, out);
}

std::set<Var> variablesOf(const TermPtr& t) {
    std::set<Var> out;
    collectVars(t, out);
    return out;
}

std::set<Var> variablesOf(const Atom& a) {
    std::set<Var> out;
    collectVars(a, out);
    return out;
}

int countSymbol(const TermPtr& t, const Symbol& f) {
    if (t->isVar()) return 0;
    int n = (t->fn() == f) ? 1 : 0;
    for (const auto& a : t->args()) n += countSymbol(a, f);
    return n;
}

std::set<Var> varsUnderSymbol(const TermPtr& t, const Symbol& f) {
    std::set<Var> out;
    if (t->isVar()) return out;
    if (t->fn() == f) {
        for (const auto& a : t->args()) collectVars(a, out);
    }
    for (const auto& a : t->args()) {
        auto sub = varsUnderSymbol(a, f);
        out.insert(sub.begin(), sub.end());
    }
    return out;
}

bool containsFunctionSymbol(const TermPtr& t) {
    if (t->isVar()) return false;
    return true;
}

}  // namespace coalp
