#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "klr/roots.hpp"

using namespace klr;

static RootVector av(std::initializer_list<std::pair<int, int>> l) {
    std::map<int, int> m;
    for (auto& [i, c] : l) m[i] = c;
    return RootVector(m);
}

TEST_CASE("words_of enumerates distinct arrangements descending") {
    auto w1 = words_of(av({{1, 1}, {2, 1}}));
    REQUIRE(w1.size() == 2);
    CHECK(w1[0] == Word{2, 1});
    CHECK(w1[1] == Word{1, 2});

    auto w2 = words_of(av({{1, 2}}));
    REQUIRE(w2.size() == 1);
    CHECK(w2[0] == Word{1, 1});

    auto w3 = words_of(av({{1, 1}, {2, 1}, {3, 1}}));
    REQUIRE(w3.size() == 6);
    CHECK(w3.front() == Word{3, 2, 1});
    CHECK(w3.back() == Word{1, 2, 3});
}

TEST_CASE("word comparison uses prefix-smaller convention") {
    CHECK(compare_words({2, 1}, {1, 2}) > 0);
    CHECK(compare_words({1}, {1, 2}) < 0);
    CHECK(compare_words({1, 2}, {2}) < 0);
    CHECK(compare_words({1, 2}, {1, 2}) == 0);
}

TEST_CASE("roots below alpha in increasing order") {
    auto rs = positive_roots_below(av({{1, 1}, {2, 1}}));
    REQUIRE(rs.size() == 3);
    CHECK(rs[0].to_text() == "(1..1)");
    CHECK(rs[1].to_text() == "(1..2)");
    CHECK(rs[2].to_text() == "(2..2)");
}

TEST_CASE("root partitions of small alphas") {
    auto p1 = root_partitions(av({{1, 1}}));
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].to_text() == "(1..1)^1");

    auto p2 = root_partitions(av({{1, 2}}));
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].to_text() == "(1..1)^2");
    CHECK(p2[0].sh() == 1);

    auto p3 = root_partitions(av({{1, 1}, {2, 1}}));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0].to_text() == "(2..2)^1 (1..1)^1");
    CHECK(p3[1].to_text() == "(1..2)^1");
    CHECK(p3[0].word() == Word{2, 1});
    CHECK(p3[1].word() == Word{1, 2});
}

TEST_CASE("root partition words are distinct and strictly sorted") {
    std::vector<RootVector> alphas;
    for (int c1 = 0; c1 <= 3; ++c1)
        for (int c2 = 0; c2 <= 3; ++c2)
            for (int c3 = 0; c3 <= 2; ++c3)
                for (int c4 = 0; c4 <= 1; ++c4) {
                    int h = c1 + c2 + c3 + c4;
                    if (h < 1 || h > 5) continue;
                    alphas.push_back(av({{1, c1}, {2, c2}, {3, c3}, {4, c4}}));
                }
    for (const auto& alpha : alphas) {
        auto ps = root_partitions(alpha);
        for (size_t k = 0; k + 1 < ps.size(); ++k)
            CHECK(compare_words(ps[k].word(), ps[k + 1].word()) > 0);
        // maximal word is the descending arrangement
        if (!ps.empty()) {
            auto words = words_of(alpha);
            CHECK(ps.front().word() == words.front());
        }
    }
}

TEST_CASE("coset representatives count and block monotonicity") {
    auto pis = root_partitions(av({{1, 2}, {2, 1}}));  // includes mixed block sizes
    for (const auto& pi : pis) {
        auto reps = min_coset_reps(pi);
        long size_spi = 1;
        {
            // |S_pi| = prod |block|!
            for (const auto& [first, size] : pi.blocks()) {
                long f = 1;
                for (int t = 2; t <= size; ++t) f *= t;
                size_spi *= f;
            }
        }
        long fact = 1;
        for (int t = 2; t <= pi.height(); ++t) fact *= t;
        CHECK(static_cast<long>(reps.size()) * size_spi == fact);
    }
}

TEST_CASE("one block yields only the identity; trivial blocks yield all of S_d") {
    auto pi_one = root_partitions(av({{1, 1}, {2, 1}, {3, 1}}));  // contains (1..3)^1
    bool found = false;
    for (const auto& pi : pi_one) {
        if (pi.parts().size() == 1 && pi.parts()[0].second == 1) {
            found = true;
            auto reps = min_coset_reps(pi);
            CHECK(reps.size() == 1);
            CHECK(reps[0].is_identity());
        }
    }
    CHECK(found);

    auto pi_all = root_partitions(av({{1, 3}}));
    REQUIRE(pi_all.size() == 1);
    CHECK(min_coset_reps(pi_all[0]).size() == 6);
}

TEST_CASE("parabolic factorization is length-additive") {
    std::vector<RootVector> alphas = {av({{1, 2}, {2, 1}}), av({{1, 1}, {2, 1}, {3, 1}}),
                                      av({{1, 4}}), av({{1, 2}, {2, 2}})};
    for (const auto& alpha : alphas) {
        for (const auto& pi : root_partitions(alpha)) {
            for (const auto& w : Permutation::all(pi.height())) {
                auto [wup, wpi] = parabolic_factorize(w, pi);
                CHECK(wup * wpi == w);
                CHECK(wup.length() + wpi.length() == w.length());
                CHECK(is_min_coset_rep(wup, pi));
            }
        }
    }
}

TEST_CASE("coset representatives for blocks {1,2},{3}") {
    for (const auto& pi : root_partitions(av({{1, 1}, {2, 1}, {3, 1}}))) {
        auto blocks = pi.blocks();
        if (blocks.size() != 2 || blocks[0].second != 2) continue;
        auto reps = min_coset_reps(pi);
        REQUIRE(reps.size() == 3);
        CHECK(reps[0].length() == 0);
        CHECK(reps[1].length() == 1);
        CHECK(reps[2].length() == 2);
    }
}

TEST_CASE("parabolic factorization examples") {
    auto pis = root_partitions(av({{1, 2}, {2, 1}}));
    // find pi with blocks {1,2},{3}: that is (1..1)^2 (2..2)^1? blocks come from parts
    for (const auto& pi : pis) {
        auto blocks = pi.blocks();
        if (blocks.size() == 2 && blocks[0].second == 2) {
            Permutation id(3);
            auto [a, b] = parabolic_factorize(id, pi);
            CHECK(a.is_identity());
            CHECK(b.is_identity());
            Permutation s1 = Permutation::transposition(3, 1);
            auto [c, d] = parabolic_factorize(s1, pi);
            CHECK(c.is_identity());
            CHECK(d == s1);
        }
    }
}

TEST_CASE("alpha text round trip") {
    auto a = av({{1, 2}, {3, 1}});
    CHECK(RootVector::parse(a.to_text()) == a);
    CHECK(a.to_text() == "1:2,3:1");
}
