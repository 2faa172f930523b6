#include "coalp/printer.hpp"

#include <algorithm>
#include <sstream>

namespace coalp {

namespace {

void printTerm(std::ostream& os, const TermPtr& t) {
    if (t->isVar()) {
        os << displayName(t->var());
        return;
    }
    os << t->fn().name;
    if (!t->args().empty()) {
        os << '(';
        for (size_t i = 0; i < t->args().size(); ++i) {
            if (i) os << ',';
            printTerm(os, t->args()[i]);
        }
        os << ')';
    }
}

void printAtom(std::ostream& os, const Atom& a) {
    os << a.pred.name;
    if (!a.args.empty()) {
        os << '(';
        for (size_t i = 0; i < a.args.size(); ++i) {
            if (i) os << ',';
            printTerm(os, a.args[i]);
        }
        os << ')';
    }
}

void printBindings(std::ostream& os, const Substitution& s, bool& first) {
    for (const auto& [v, t] : s.bindings()) {
        if (!first) os << ", ";
        first = false;
        os << displayName(v) << '/';
        printTerm(os, t);
    }
}

}  // namespace

std::string toString(const TermPtr& t) {
    std::ostringstream os;
    printTerm(os, t);
    return os.str();
}

std::string toString(const Atom& a) {
    std::ostringstream os;
    printAtom(os, a);
    return os.str();
}

std::string toString(const Clause& c) {
    std::ostringstream os;
    printAtom(os, c.head);
    if (!c.body.empty()) {
        os << " :- ";
        for (size_t i = 0; i < c.body.size(); ++i) {
            if (i) os << ", ";
            printAtom(os, c.body[i]);
        }
    }
    os << '.';
    return os.str();
}

std::string toString(const Program& p) {
    std::ostringstream os;
    for (const auto& c : p.clauses) os << toString(c) << '\n';
    return os.str();
}

std::string toString(const Substitution& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    printBindings(os, s, first);
    os << '}';
    return os.str();
}

std::string formatAnswer(const std::vector<Substitution>& chain) {
    // Canonical presentation: the union of the per-step bindings, ordered
    // by variable. A chain binds each variable at most once, so sorting
    // loses no information and matches how answers are conventionally
    // written ({x/cons(x1,y1), x1/s(x2), x2/0, y1/nil}).
    std::vector<Substitution::Binding> all;
    for (const auto& s : chain)
        for (const auto& b : s.bindings()) all.push_back(b);
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [v, t] : all) {
        if (!first) os << ", ";
        first = false;
        os << displayName(v) << '/';
        printTerm(os, t);
    }
    os << '}';
    return os.str();
}

std::string formatSolved(const std::vector<Substitution>& chain,
                         const std::set<Var>& goalVars) {
    return toString(restrictTo(flattenChain(chain), goalVars));
}

}  // namespace coalp
