#include "coalp/subst.hpp"

namespace coalp {

std::optional<TermPtr> Substitution::lookup(const Var& v) const {
    for (const auto& [bv, bt] : bindings_)
        if (bv == v) return bt;
    return std::nullopt;
}

void Substitution::bind(const Var& v, const TermPtr& t) {
    if (t->isVar() && t->var() == v) return;
    bindings_.emplace_back(v, t);
}

bool operator==(const Substitution& a, const Substitution& b) {
    if (a.bindings_.size() != b.bindings_.size()) return false;
    for (size_t i = 0; i < a.bindings_.size(); ++i) {
        if (a.bindings_[i].first != b.bindings_[i].first) return false;
        if (!termEq(a.bindings_[i].second, b.bindings_[i].second)) return false;
    }
    return true;
}

TermPtr applySubst(const TermPtr& t, const Substitution& s) {
    if (s.empty()) return t;
    if (t->isVar()) {
        if (auto b = s.lookup(t->var())) return *b;
        return t;
    }
    bool changed = false;
    std::vector<TermPtr> args;
    args.reserve(t->args().size());
    for (const auto& a : t->args()) {
        TermPtr na = applySubst(a, s);
        changed = changed || na.get() != a.get();
        args.push_back(std::move(na));
    }
    if (!changed) return t;
    return Term::makeApp(t->fn(), std::move(args));
}

Atom applySubst(const Atom& a, const Substitution& s) {
    if (s.empty()) return a;
    Atom out;
    out.pred = a.pred;
    out.args.reserve(a.args.size());
    for (const auto& t : a.args) out.args.push_back(applySubst(t, s));
    return out;
}

Substitution compose(const Substitution& s1, const Substitution& s2) {
    Substitution out;
    for (const auto& [v, t] : s1.bindings()) out.bind(v, applySubst(t, s2));
    for (const auto& [v, t] : s2.bindings()) {
        if (!s1.bound(v)) out.bind(v, t);
    }
    return out;
}

Substitution restrictTo(const Substitution& s, const std::set<Var>& vars) {
    Substitution out;
    for (const auto& [v, t] : s.bindings())
        if (vars.count(v)) out.bind(v, t);
    return out;
}

Substitution flattenChain(const std::vector<Substitution>& chain) {
    Substitution out;
    for (const auto& s : chain) out = compose(out, s);
    return out;
}

}  // namespace coalp
