#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace coalp {

/// A function or predicate symbol. Arity is fixed program-wide.
struct Symbol {
    std::string name;
    int arity = 0;

    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.name == b.name && a.arity == b.arity;
    }
    friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }
};

/// Variable identity is (name, generation). Generation 0 means "as written
/// in the source"; renamed clause variants get positive generations.
struct Var {
    std::string name;
    int gen = 0;

    friend bool operator==(const Var& a, const Var& b) {
        return a.gen == b.gen && a.name == b.name;
    }
    friend bool operator!=(const Var& a, const Var& b) { return !(a == b); }
    friend bool operator<(const Var& a, const Var& b) {
        if (a.name != b.name) return a.name < b.name;
        return a.gen < b.gen;
    }
};

std::string displayName(const Var& v);

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// First-order term: a variable or a compound f(t1,...,tn).
/// Immutable after construction; shared freely across threads.
class Term {
public:
    static TermPtr makeVar(Var v);
    static TermPtr makeApp(Symbol f, std::vector<TermPtr> args);

    bool isVar() const { return isVar_; }
    const Var& var() const { return var_; }
    const Symbol& fn() const { return fn_; }
    const std::vector<TermPtr>& args() const { return args_; }

private:
    Term() = default;
    bool isVar_ = false;
    Var var_;
    Symbol fn_;
    std::vector<TermPtr> args_;
};

struct Atom {
    Symbol pred;
    std::vector<TermPtr> args;
};

bool termEq(const TermPtr& a, const TermPtr& b);
bool atomEq(const Atom& a, const Atom& b);

bool isGround(const TermPtr& t);
bool isGround(const Atom& a);

void collectVars(const TermPtr& t, std::set<Var>& out);
void collectVars(const Atom& a, std::set<Var>& out);
std::set<Var> variablesOf(const TermPtr& t);
std::set<Var> variablesOf(const Atom& a);

/// Occurrence count of function symbol f inside t (nested included).
int countSymbol(const TermPtr& t, const Symbol& f);

/// Variables appearing anywhere under an occurrence of f in t
/// (arguments of f, recursively).
std::set<Var> varsUnderSymbol(const TermPtr& t, const Symbol& f);

/// True if t contains at least one function symbol (constants count).
bool containsFunctionSymbol(const TermPtr& t);

}  // namespace coalp
