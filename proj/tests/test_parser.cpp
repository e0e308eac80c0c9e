#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "klr/parser.hpp"

using namespace klr;

static RootVector av(std::initializer_list<std::pair<int, int>> l) {
    std::map<int, int> m;
    for (auto& [i, c] : l) m[i] = c;
    return RootVector(m);
}

TEST_CASE("products of atoms parse and evaluate") {
    Context ctx(av({{1, 2}}));
    Element e = eval(parse("s1*y2*e(1,1)"), ctx);
    CHECK(e == ctx.monomial(ctx.sr_perm(1, ctx.identity_perm()), {0, 1}, 0));
}

TEST_CASE("tau parses as a unary node and validates at eval") {
    Context ctx(av({{1, 1}, {2, 1}, {3, 1}}));
    CHECK_THROWS_AS(eval(parse("tau(s1*s2*e(1,2,1))"), ctx), EvalError);
}

TEST_CASE("tau of a valid product matches the engine") {
    Context ctx(av({{1, 2}, {2, 1}}));
    Element a = eval(parse("tau(s1*s2*e(1,2,1))"), ctx);
    Element b = tau(mul(ctx.gen_element(Gen::cross(1)),
                        mul(ctx.gen_element(Gen::cross(2)),
                            ctx.idem(ctx.word_index({1, 2, 1})))));
    CHECK(a == b);
}

TEST_CASE("syntax error column matches the unclosed paren") {
    try {
        parse("y1*(");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column == 4);
        CHECK(std::string(e.what()).find("column 4") != std::string::npos);
    }
}

TEST_CASE("psi squared on adjacent letters renders canonically") {
    Context ctx(av({{1, 1}, {2, 1}}));
    Element e = eval(parse("s1*s1*e(1,2)"), ctx);
    CHECK(e.to_text() == "(1)*y[1,0]*e(1,2) + (-1)*y[0,1]*e(1,2)");
}

TEST_CASE("orthogonal idempotents multiply to zero") {
    Context ctx(av({{1, 1}, {2, 1}}));
    CHECK(eval(parse("e(1,2)*e(2,1)"), ctx).is_zero());
}

TEST_CASE("e_2 idempotency through the parser") {
    Context ctx(av({{1, 2}}));
    Element once = eval(parse("s1*y2*e(1,1)"), ctx);
    Element twice = eval(parse("s1*y2*e(1,1)*s1*y2*e(1,1)"), ctx);
    CHECK(once == twice);
}

TEST_CASE("sums, signs and integer coefficients") {
    Context ctx(av({{1, 1}}));
    Element e = eval(parse("2*e(1) - e(1) + 3*y1"), ctx);
    CHECK(e == ctx.idem(0) + ctx.gen_element(Gen::dot(1)).scaled(3));
}

TEST_CASE("range violations are eval errors with names") {
    Context ctx(av({{1, 2}}));
    CHECK_THROWS_AS(eval(parse("y3*e(1,1)"), ctx), EvalError);
    CHECK_THROWS_AS(eval(parse("s2*e(1,1)"), ctx), EvalError);
    CHECK_THROWS_AS(eval(parse("e(1,2)"), ctx), EvalError);
}

TEST_CASE("parse-render-eval round trip is stable") {
    Context ctx(av({{1, 1}, {2, 1}}));
    Element e = eval(parse("s1*s1*e(1,2)"), ctx);
    std::string text = e.to_text();
    Element rebuilt = ctx.zero();
    rebuilt.add(eval(parse("y1*e(1,2)"), ctx), 1);
    rebuilt.add(eval(parse("y2*e(1,2)"), ctx), -1);
    CHECK(rebuilt == e);
    CHECK(rebuilt.to_text() == text);
}
