#include "doctest.h"

#include "coalp/printer.hpp"
#include "coalp/term.hpp"

using namespace coalp;

namespace {

TermPtr v(const std::string& n, int gen = 0) { return Term::makeVar(Var{n, gen}); }
TermPtr c(const std::string& n) { return Term::makeApp(Symbol{n, 0}, {}); }
TermPtr f1(const std::string& n, TermPtr a) { return Term::makeApp(Symbol{n, 1}, {a}); }
TermPtr f2(const std::string& n, TermPtr a, TermPtr b) {
    return Term::makeApp(Symbol{n, 2}, {a, b});
}

}  // namespace

TEST_CASE("term construction and structural equality") {
    TermPtr t1 = f2("cons", c("0"), c("nil"));
    TermPtr t2 = f2("cons", c("0"), c("nil"));
    CHECK(termEq(t1, t2));
    CHECK_FALSE(termEq(t1, f2("cons", c("nil"), c("0"))));
    CHECK_FALSE(termEq(t1, c("nil")));
    CHECK(termEq(v("x"), v("x")));
    CHECK_FALSE(termEq(v("x"), v("x", 1)));  // generations distinguish variants
}

TEST_CASE("groundness") {
    CHECK(isGround(f1("s", c("0"))));
    CHECK_FALSE(isGround(f1("s", v("x"))));
    CHECK(isGround(Atom{Symbol{"p", 1}, {c("a")}}));
    CHECK_FALSE(isGround(Atom{Symbol{"p", 1}, {v("x")}}));
}

TEST_CASE("variable collection is sorted and deduplicated") {
    TermPtr t = f2("cons", v("x"), f2("cons", v("y"), v("x")));
    auto vars = variablesOf(t);
    CHECK(vars.size() == 2);
    CHECK(vars.count(Var{"x", 0}) == 1);
    CHECK(vars.count(Var{"y", 0}) == 1);
}

TEST_CASE("countSymbol counts nested occurrences") {
    Symbol s{"s", 1};
    TermPtr t = f1("s", f1("s", f1("s", v("x"))));
    CHECK(countSymbol(t, s) == 3);
    CHECK(countSymbol(v("x"), s) == 0);
    CHECK(countSymbol(c("0"), Symbol{"0", 0}) == 1);
}

TEST_CASE("varsUnderSymbol collects variables under the symbol's occurrences") {
    Symbol cons{"cons", 2};
    TermPtr t = f2("pair", v("a"), f2("cons", v("x"), v("y")));
    auto under = varsUnderSymbol(t, cons);
    CHECK(under.size() == 2);
    CHECK(under.count(Var{"x", 0}) == 1);
    CHECK(under.count(Var{"a", 0}) == 0);
}

TEST_CASE("containsFunctionSymbol treats constants as function symbols") {
    CHECK(containsFunctionSymbol(c("0")));
    CHECK(containsFunctionSymbol(f1("s", v("x"))));
    CHECK_FALSE(containsFunctionSymbol(v("x")));
}

TEST_CASE("display names append the generation when positive") {
    CHECK(displayName(Var{"X", 0}) == "X");
    CHECK(displayName(Var{"X", 2}) == "X2");
    CHECK(toString(v("Y", 1)) == "Y1");
}

TEST_CASE("printing is nested and parenthesis-exact") {
    TermPtr t = f2("cons", f1("s", c("0")), c("nil"));
    CHECK(toString(t) == "cons(s(0),nil)");
    Atom a{Symbol{"list", 1}, {t}};
    CHECK(toString(a) == "list(cons(s(0),nil))");
}
