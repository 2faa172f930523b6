#include "coalp/program.hpp"

namespace coalp {

namespace {

TermPtr renameTerm(const TermPtr& t, int gen) {
    if (t->isVar()) return Term::makeVar(Var{t->var().name, gen});
    std::vector<TermPtr> args;
    args.reserve(t->args().size());
    for (const auto& a : t->args()) args.push_back(renameTerm(a, gen));
    return Term::makeApp(t->fn(), std::move(args));
}

Atom renameAtom(const Atom& a, int gen) {
    Atom out;
    out.pred = a.pred;
    out.args.reserve(a.args.size());
    for (const auto& t : a.args) out.args.push_back(renameTerm(t, gen));
    return out;
}

}  // namespace

bool Program::isGround() const {
    for (const auto& c : clauses) {
        if (!coalp::isGround(c.head)) return false;
        for (const auto& b : c.body)
            if (!coalp::isGround(b)) return false;
    }
    return true;
}

Clause renameApart(const Clause& c, int freshGeneration) {
    Clause out;
    out.head = renameAtom(c.head, freshGeneration);
    out.body.reserve(c.body.size());
    for (const auto& b : c.body) out.body.push_back(renameAtom(b, freshGeneration));
    return out;
}

std::set<Var> variablesOf(const Clause& c) {
    std::set<Var> out;
    collectVars(c.head, out);
    for (const auto& b : c.body) collectVars(b, out);
    return out;
}

}  // namespace coalp
