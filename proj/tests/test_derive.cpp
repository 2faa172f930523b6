#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "coalp/derive.hpp"
#include "coalp/printer.hpp"
#include "coalp/sld.hpp"
#include "helpers.hpp"

using namespace coalp;
using testutil::goal;
using testutil::loadFixture;

namespace {

std::vector<std::string> chains(const DeriveResult& r) {
    std::vector<std::string> out;
    for (const auto& a : r.answers) out.push_back(formatAnswer(a.chain));
    return out;
}

std::vector<std::string> solvedForms(const DeriveResult& r) {
    std::vector<std::string> out;
    for (const auto& a : r.answers) out.push_back(toString(a.solved));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("ListNat enumerates the three §-style chains in rank order") {
    Program p = loadFixture("listnat");
    DeriveOptions o;
    o.maxAnswers = 3;
    DeriveResult r = derive(p, goal("list(X).", p), o);
    REQUIRE(r.answers.size() == 3);
    CHECK(formatAnswer(r.answers[0].chain) == "{X/nil}");
    CHECK(formatAnswer(r.answers[1].chain) == "{X/cons(X1,Y1), X1/0, Y1/nil}");
    CHECK(formatAnswer(r.answers[2].chain) == "{X/cons(X1,Y1), X1/s(X2), X2/0, Y1/nil}");
    CHECK(r.answers[0].rank == 1);
    CHECK(r.answers[1].rank == 3);
    CHECK(r.answers[2].rank == 4);
}

TEST_CASE("priority equals the binding count of the chain") {
    Program p = loadFixture("listnat");
    DeriveOptions o;
    o.maxAnswers = 6;
    DeriveResult r = derive(p, goal("list(X).", p), o);
    int lastRank = 0;
    for (const auto& a : r.answers) {
        int bindings = 0;
        for (const auto& s : a.chain) bindings += static_cast<int>(s.size());
        CHECK(a.rank == bindings);
        CHECK(a.rank >= lastRank);  // nondecreasing emission order
        lastRank = a.rank;
    }
}

TEST_CASE("emitted answers replay: the chain rebuilds a success tree") {
    Program p = loadFixture("listnat");
    DeriveOptions o;
    o.maxAnswers = 5;
    Atom g = goal("list(X).", p);
    DeriveResult r = derive(p, g, o);
    for (const auto& a : r.answers) {
        CHECK(findSuccessSubtree(a.successTree).has_value());
        Atom instantiated = applySubst(g, flattenChain(a.chain));
        CHECK(atomEq(instantiated, a.rootAtom));
        BuildResult replay = buildCoTree(p, instantiated);
        CHECK(findSuccessSubtree(replay.tree).has_value());
    }
}

TEST_CASE("unsound and-or answers are excluded: list(cons(X,cons(Y,X))) fails") {
    Program p = loadFixture("listnat");
    DeriveOptions o;
    o.maxStates = 10000;
    DeriveResult r = derive(p, goal("list(cons(X,cons(Y,X))).", p), o);
    CHECK(r.answers.empty());
    CHECK(r.status == DeriveStatus::Exhausted);
}

TEST_CASE("derivations over Stream are lazy: finite trees, no termination") {
    Program p = loadFixture("stream");
    DeriveOptions o;
    o.maxAnswers = 1;
    o.maxStates = 100;
    DeriveResult r = derive(p, goal("stream(X).", p), o);
    CHECK(r.answers.empty());
    CHECK(r.status == DeriveStatus::StateLimit);
    CHECK_FALSE(r.budgetExceeded);  // every tree stayed finite and small
}

TEST_CASE("stream expansions branch on the bit alternatives") {
    Program p = loadFixture("stream");
    Atom g = goal("stream(X).", p);
    BuildResult b = buildCoTree(p, g);
    DerivationState s;
    s.rootAtom = g;
    s.tree = b.tree;
    DeriveOptions o;
    bool budget = false;
    auto succ1 = expandState(p, s, o, &budget);
    REQUIRE(succ1.size() == 1);  // only the scons clause unifies
    CHECK(toString(succ1[0].rootAtom) == "stream(scons(X1,Y1))");
    auto succ2 = expandState(p, succ1[0], o, &budget);
    REQUIRE(succ2.size() == 2);  // bit(X1) via bit(0) and bit(1)
    CHECK(toString(succ2[0].rootAtom) == "stream(scons(0,Y1))");
    CHECK(toString(succ2[1].rootAtom) == "stream(scons(1,Y1))");
}

TEST_CASE("success states are not expanded and dead states are dropped") {
    Program p = loadFixture("gc_guarded");
    DeriveResult r = derive(p, goal("connected(0,cons(s(0),nil)).", p));
    REQUIRE(r.answers.size() == 1);
    CHECK(r.answers[0].rank == 0);
    CHECK(r.answers[0].chain.empty());
    CHECK(r.status == DeriveStatus::Exhausted);
    CHECK(r.statesExpanded == 0);  // the initial state is already a success
}

TEST_CASE("unguarded programs are refused without force") {
    Program p = loadFixture("gc");
    DeriveResult r = derive(p, goal("connected(0,X).", p));
    CHECK(r.status == DeriveStatus::NotGuarded);
    CHECK(r.answers.empty());
    REQUIRE(r.guardReport);
    CHECK_FALSE(r.guardReport->guarded);

    DeriveOptions forced;
    forced.force = true;
    forced.maxStates = 5;
    forced.nodeBudget = 64;
    DeriveResult rf = derive(p, goal("connected(0,X).", p), forced);
    CHECK(rf.budgetExceeded);  // infinite trees surface as budget hits
}

TEST_CASE("thread-count determinism over fixtures and goals") {
    struct Case {
        const char* program;
        const char* goalText;
    };
    const Case cases[] = {
        {"listnat", "list(X)."},
        {"listnat", "list(cons(X,Y))."},
        {"stream", "stream(X)."},
        {"gc_guarded", "connected(0,X)."},
        {"nats", "nats(X)."},
    };
    for (const auto& c : cases) {
        Program p = loadFixture(c.program);
        Atom g = goal(c.goalText, p);
        DeriveOptions base;
        base.maxAnswers = 6;
        base.maxStates = 300;
        DeriveResult r1 = derive(p, g, base);
        for (int workers : {2, 4}) {
            DeriveOptions o = base;
            o.workers = workers;
            DeriveResult rn = derive(p, g, o);
            // Identical rank sequences and chains, not just multisets.
            CHECK_MESSAGE(chains(rn) == chains(r1), c.program, " ", c.goalText,
                          " workers=", workers);
            CHECK(solvedForms(rn) == solvedForms(r1));
            CHECK(rn.status == r1.status);
            CHECK(rn.statesExpanded == r1.statesExpanded);
        }
    }
}

TEST_CASE("answers agree with the ground fixpoint oracle") {
    Program p = loadFixture("ground_ex38");
    HerbrandInterpretation model = groundTp(p);
    const char* goals[] = {"p(a).", "q(b,a).", "s(a,b)."};
    for (const char* gt : goals) {
        Atom g = goal(gt, p);
        DeriveResult r = derive(p, g);
        CHECK_MESSAGE(!r.answers.empty() == model.contains(g), gt);
    }
}

TEST_CASE("answers are deduplicated by solved form") {
    // ground_ex38 proves q(b,a) twice (fact and rule); one answer suffices.
    Program p = loadFixture("ground_ex38");
    DeriveResult r = derive(p, goal("q(b,a).", p));
    CHECK(r.answers.size() == 1);
}

TEST_CASE("answer limit and state limit statuses") {
    Program p = loadFixture("listnat");
    DeriveOptions o;
    o.maxAnswers = 2;
    DeriveResult r = derive(p, goal("list(X).", p), o);
    CHECK(r.status == DeriveStatus::AnswerLimit);
    CHECK(r.answers.size() == 2);

    DeriveOptions tight;
    tight.maxStates = 1;
    DeriveResult rs = derive(p, goal("list(X).", p), tight);
    CHECK(rs.status == DeriveStatus::StateLimit);
}
