#include "coalp/unify.hpp"

#include <utility>
#include <vector>

namespace coalp {

namespace {

bool occurs(const Var& v, const TermPtr& t) {
    // Explicit stack: stream-style programs build deep cons chains.
    std::vector<const Term*> stack{t.get()};
    while (!stack.empty()) {
        const Term* cur = stack.back();
        stack.pop_back();
        if (cur->isVar()) {
            if (cur->var() == v) return true;
        } else {
            for (const auto& a : cur->args()) stack.push_back(a.get());
        }
    }
    return false;
}

bool unifyInto(const TermPtr& a0, const TermPtr& b0, Substitution& s) {
    std::vector<std::pair<TermPtr, TermPtr>> work{{a0, b0}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        a = applySubst(a, s);
        b = applySubst(b, s);
        if (a->isVar() && b->isVar() && a->var() == b->var()) continue;
        if (a->isVar() || b->isVar()) {
            const TermPtr& vt = a->isVar() ? a : b;
            const TermPtr& other = a->isVar() ? b : a;
            if (occurs(vt->var(), other)) return false;
            // Keep s idempotent: rewrite existing right-hand sides first.
            Substitution one;
            one.bind(vt->var(), other);
            Substitution next;
            for (const auto& [bv, bt] : s.bindings()) next.bind(bv, applySubst(bt, one));
            next.bind(vt->var(), other);
            s = std::move(next);
            continue;
        }
        if (a->fn() != b->fn()) return false;
        // Push in reverse so the leftmost pair is processed first.
        for (size_t i = a->args().size(); i-- > 0;)
            work.emplace_back(a->args()[i], b->args()[i]);
    }
    return true;
}

bool matchInto(const TermPtr& h0, const TermPtr& g0, Substitution& s) {
    std::vector<std::pair<TermPtr, TermPtr>> work{{h0, g0}};
    while (!work.empty()) {
        auto [h, g] = work.back();
        work.pop_back();
        if (h->isVar()) {
            if (auto prior = s.lookup(h->var())) {
                if (!termEq(*prior, g)) return false;
                continue;
            }
            if (g->isVar() && g->var() == h->var()) continue;
            s.bind(h->var(), g);
            continue;
        }
        if (g->isVar()) return false;
        if (h->fn() != g->fn()) return false;
        for (size_t i = h->args().size(); i-- > 0;)
            work.emplace_back(h->args()[i], g->args()[i]);
    }
    return true;
}

}  // namespace

std::optional<Substitution> unifyTerms(const TermPtr& a, const TermPtr& b) {
    Substitution s;
    if (!unifyInto(a, b, s)) return std::nullopt;
    return s;
}

std::optional<Substitution> unify(const Atom& a, const Atom& b) {
    if (a.pred != b.pred) return std::nullopt;
    Substitution s;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!unifyInto(a.args[i], b.args[i], s)) return std::nullopt;
    return s;
}

std::optional<Substitution> termMatchTerms(const TermPtr& head, const TermPtr& goal) {
    Substitution s;
    if (!matchInto(head, goal, s)) return std::nullopt;
    return s;
}

std::optional<Substitution> termMatch(const Atom& head, const Atom& goal) {
    if (head.pred != goal.pred) return std::nullopt;
    Substitution s;
    for (size_t i = 0; i < head.args.size(); ++i)
        if (!matchInto(head.args[i], goal.args[i], s)) return std::nullopt;
    return s;
}

}  // namespace coalp
