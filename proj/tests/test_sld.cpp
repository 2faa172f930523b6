#include "doctest.h"

#include <string>

#include "coalp/printer.hpp"
#include "coalp/sld.hpp"
#include "helpers.hpp"

using namespace coalp;
using testutil::goal;
using testutil::loadFixture;

TEST_CASE("sldStep resolves the selected atom and collapses duplicates") {
    Program p = loadFixture("listnat");
    GoalList g = {goal("list(cons(0,nil)).", p)};
    Clause renamed = renameApart(p.clauses[3], 1);  // list(cons(X,Y)) :- nat(X), list(Y).
    auto r = sldStep(g, renamed, 0);
    REQUIRE(r);
    REQUIRE(r->resolvent.size() == 2);
    CHECK(toString(r->resolvent[0]) == "nat(0)");
    CHECK(toString(r->resolvent[1]) == "list(nil)");
}

TEST_CASE("sldSolve enumerates ListNat answers in Prolog order") {
    Program p = loadFixture("listnat");
    SldSolveResult r = sldSolve(p, {goal("list(X).", p)}, 12, 4);
    REQUIRE(r.answers.size() == 4);
    CHECK(toString(r.answers[0]) == "{X/nil}");
    CHECK(toString(r.answers[1]) == "{X/cons(0,nil)}");
    // Prolog's depth-first order dives into nat before the list tail:
    CHECK(toString(r.answers[2]) == "{X/cons(0,cons(0,nil))}");
}

TEST_CASE("sldSolve never reaches cons(s(0),nil) on list(X) at depth 12") {
    // Prolog diverges down the nat branch before ever producing a list
    // whose head is s(0).
    Program p = loadFixture("listnat");
    SldSolveResult r = sldSolve(p, {goal("list(X).", p)}, 12, 1000);
    for (const auto& a : r.answers) CHECK(toString(a) != "{X/cons(s(0),nil)}");
    CHECK(r.depthExhausted);
}

TEST_CASE("a depth-cut branch stops enumeration like a diverging Prolog run") {
    // gc_prime is left-recursive: the very first branch loops, so SLD
    // finds nothing even though reordered clauses would succeed.
    Program p = loadFixture("gc_prime");
    SldSolveResult r = sldSolve(p, {goal("connected(0,s(0)).", p)}, 32, 10);
    CHECK(r.answers.empty());
    CHECK(r.depthExhausted);
}

TEST_CASE("sldSolve succeeds on gc where derivations exist before the cut") {
    Program p = loadFixture("gc");
    SldSolveResult r = sldSolve(p, {goal("connected(0,s(0)).", p)}, 32, 1);
    REQUIRE(r.answers.size() == 1);
    CHECK(r.answers[0].empty());
}

TEST_CASE("buildSldTree marks success, failure, and open nodes") {
    Program p = loadFixture("listnat");
    SldTree t = buildSldTree(p, {goal("list(nil).", p)}, 4);
    REQUIRE_FALSE(t.nodes.empty());
    CHECK(t.nodes[0].kind == SldTree::Kind::Inner);
    bool sawSuccess = false;
    for (const auto& n : t.nodes)
        if (n.kind == SldTree::Kind::Success) sawSuccess = true;
    CHECK(sawSuccess);

    SldTree f = buildSldTree(p, {goal("nat(nil).", p)}, 4);
    for (const auto& n : f.nodes) CHECK(n.kind != SldTree::Kind::Success);
}

TEST_CASE("groundTp computes the least Herbrand model of the ground example") {
    Program p = loadFixture("ground_ex38");
    HerbrandInterpretation m = groundTp(p);
    CHECK(m.atoms.size() == 3);
    CHECK(m.contains(goal("q(b,a).", p)));
    CHECK(m.contains(goal("s(a,b).", p)));
    CHECK(m.contains(goal("p(a).", p)));
}

TEST_CASE("groundTp rejects non-ground programs") {
    Program p = loadFixture("listnat");
    CHECK_THROWS_AS(groundTp(p), NonGroundError);
}

TEST_CASE("and-or tree of the ground example reports the proof of p(a)") {
    Program p = loadFixture("ground_ex38");
    AndOrTree t = buildAndOrTree(p, goal("p(a).", p), 16);
    REQUIRE_FALSE(t.nodes.empty());
    CHECK(toString(t.nodes[0].atom) == "p(a)");
    // p(a) has a single matching clause, so the or-level is elided.
    CHECK(t.nodes[0].direct);
    CHECK(t.nodes[0].directChildren.size() == 2);
}
