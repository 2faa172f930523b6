#include "coalp/datalog.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

#include "coalp/printer.hpp"

namespace coalp {

namespace {

// rng() % n is used instead of uniform_int_distribution so instances are
// byte-identical across standard library implementations.
size_t pick(std::mt19937_64& rng, size_t n) { return static_cast<size_t>(rng() % n); }

}  // namespace

DatalogInstance generateDatalog(const DatalogSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    DatalogInstance out;
    Program& p = out.program;

    std::vector<TermPtr> consts;
    for (int i = 0; i < std::max(1, spec.constants); ++i) {
        std::string name = "c" + std::to_string(i);
        consts.push_back(Term::makeApp(Symbol{name, 0}, {}));
        p.funcArity[name] = 0;
    }

    auto randomAtom = [&](const Symbol& pred) {
        std::vector<TermPtr> args;
        for (int i = 0; i < pred.arity; ++i) args.push_back(consts[pick(rng, consts.size())]);
        return Atom{pred, std::move(args)};
    };

    // Atoms already known derivable, usable as rule bodies and the goal.
    std::vector<Atom> derivable;
    std::set<std::string> derivableKeys;
    std::set<std::string> clauseKeys;
    auto addDerivable = [&](const Atom& a) {
        if (derivableKeys.insert(toString(a)).second) derivable.push_back(a);
    };

    for (int layer = 0; layer < std::max(1, spec.layers); ++layer) {
        size_t layerStart = derivable.size();
        for (int pi = 0; pi < std::max(1, spec.predsPerLayer); ++pi) {
            Symbol pred{"q" + std::to_string(layer) + "_" + std::to_string(pi), 2};
            p.predArity[pred.name] = pred.arity;
            if (layer == 0) {
                for (int f = 0; f < std::max(1, spec.factsPerPred); ++f) {
                    Atom head = randomAtom(pred);
                    if (!clauseKeys.insert(toString(head)).second) continue;
                    p.clauses.push_back(Clause{head, {}});
                    addDerivable(head);
                }
                continue;
            }
            for (int r = 0; r < std::max(1, spec.rulesPerPred); ++r) {
                Atom head = randomAtom(pred);
                // Bodies sample earlier-layer derivable atoms, so the head
                // is derivable by construction.
                std::vector<Atom> body;
                std::set<std::string> bodyKeys;
                int wanted = 1 + static_cast<int>(pick(rng, std::max(1, spec.bodyAtoms)));
                for (int b = 0; b < wanted; ++b) {
                    const Atom& a = derivable[pick(rng, layerStart)];
                    if (bodyKeys.insert(toString(a)).second) body.push_back(a);
                }
                Clause c{head, std::move(body)};
                if (!clauseKeys.insert(toString(c)).second) continue;
                p.clauses.push_back(std::move(c));
                addDerivable(head);
            }
        }
    }

    out.goal = derivable.back();
    return out;
}

}  // namespace coalp
