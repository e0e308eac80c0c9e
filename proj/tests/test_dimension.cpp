#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "klr/dimension.hpp"

using namespace klr;

static RootVector av(std::initializer_list<std::pair<int, int>> l) {
    std::map<int, int> m;
    for (auto& [i, c] : l) m[i] = c;
    return RootVector(m);
}

TEST_CASE("c_pi closed forms") {
    Context ctx(av({{1, 1}, {2, 1}}));
    auto pis = root_partitions(ctx.alpha());
    REQUIRE(pis.size() == 2);
    // top pi = (2..2)^1 (1..1)^1: c = 1 + q
    QSeries top = c_pi(ctx, pis[0], 8);
    CHECK(top.coeff(0) == 1);
    CHECK(top.coeff(1) == 1);
    CHECK(top.coeff(2) == 0);
    // bottom pi = (1..2)^1: single root: c = 1
    QSeries bot = c_pi(ctx, pis[1], 8);
    CHECK(bot.coeff(0) == 1);
    CHECK(bot.coeff(1) == 0);

    Context ctx2(av({{1, 2}}));
    auto pis2 = root_partitions(ctx2.alpha());
    REQUIRE(pis2.size() == 1);
    QSeries c2 = c_pi(ctx2, pis2[0], 8);  // q + q^{-1}
    CHECK(c2.coeff(1) == 1);
    CHECK(c2.coeff(-1) == 1);
    CHECK(c2.coeff(0) == 0);
}

TEST_CASE("c_pi lowest exponent bound") {
    for (auto alpha : {av({{1, 2}}), av({{1, 2}, {2, 1}}), av({{1, 2}, {2, 2}})}) {
        Context ctx(alpha);
        for (const auto& pi : root_partitions(alpha)) {
            QSeries c = c_pi(ctx, pi, 8);
            long maxlen = 0;
            for (const auto& w : min_coset_reps(pi)) maxlen = std::max(maxlen, w.length());
            for (const auto& [e, v] : c.coeffs())
                CHECK(e >= -2 * maxlen + pi.sh());
        }
    }
}

TEST_CASE("l_pi closed forms") {
    auto pis = root_partitions(av({{1, 2}}));
    QSeries l = l_pi(pis[0], 4);  // 1/((1-q^2)(1-q^4)) = 1 + q^2 + 2 q^4 + ...
    CHECK(l.coeff(0) == 1);
    CHECK(l.coeff(2) == 1);
    CHECK(l.coeff(4) == 2);

    auto pis2 = root_partitions(av({{1, 1}, {2, 1}}));
    QSeries l2 = l_pi(pis2[0], 6);  // two parts with p=1 each: 1/(1-q^2)^2
    CHECK(l2.coeff(0) == 1);
    CHECK(l2.coeff(2) == 2);
    CHECK(l2.coeff(4) == 3);
}

TEST_CASE("dimension identity for alpha = 2 alpha_1 in closed form") {
    // (q + q^{-1})^2 / ((1-q^2)(1-q^4)) = (1 + q^{-2}) / (1-q^2)^2
    long M = 16;
    QSeries c = QSeries::monomial(1, 1, M) + QSeries::monomial(1, -1, M);
    QSeries lhs = c * c * QSeries::inv_one_minus(2, M) * QSeries::inv_one_minus(4, M);
    QSeries g = QSeries::inv_one_minus(2, M);
    QSeries rhs = (QSeries::one(M) + QSeries::monomial(1, -2, M)) * g * g;
    auto cmp = lhs.compare(rhs);
    CHECK(cmp.equal);
    CHECK(cmp.hi >= 8);
}

TEST_CASE("dim_check agreement on the desk-scale range") {
    for (auto alpha : {av({{1, 1}}), av({{1, 2}}), av({{1, 1}, {2, 1}}), av({{1, 3}}),
                       av({{1, 2}, {2, 1}}), av({{1, 1}, {2, 1}, {3, 1}}), av({{1, 1}, {3, 1}})}) {
        Context ctx(alpha);
        DimReport rep = dim_check(ctx, 8);
        INFO("alpha=", alpha.to_text(), " first_diff=", rep.first_diff);
        CHECK(rep.agree);
    }
}

TEST_CASE("report rendering is stable") {
    Context ctx(av({{1, 2}}));
    DimReport rep = dim_check(ctx, 6);
    CHECK(rep.agree);
    std::string t1 = rep.to_text();
    std::string t2 = dim_check(ctx, 6).to_text();
    CHECK(t1 == t2);
    CHECK(t1.find("agreement: yes") != std::string::npos);
}
