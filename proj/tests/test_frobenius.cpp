#include <doctest.h>

#include <algorithm>
#include <random>

#include "pwidth/frobenius.hpp"
#include "pwidth/matgrp.hpp"

using namespace pw;

namespace {

struct Fixture {
    FiniteGroup G;
    ClassData cd;
    CharTable t;
    explicit Fixture(const char* spec)
        : G(realize_group(GroupSpec::parse(spec))),
          cd(G),
          t(dixon_table(G, cd, GroupSpec::parse(spec).describe())) {}
};

} // namespace

TEST_CASE("identity-target kappa equals the centralizer order") {
    const Fixture f("an:5");
    const std::size_t idc = f.t.identity_class();
    for (std::size_t c = 0; c < f.t.count(); ++c) {
        const auto sc = kappa(f.t, {c, f.t.classes[c].inverse}, idc);
        CHECK(sc.value == Rational(f.t.centralizer_order(c)));
        CHECK(solution_count(f.t, sc) == Rational(f.t.classes[c].size));
        CHECK(membership(f.t, {c, f.t.classes[c].inverse}, idc));
    }
}

TEST_CASE("the order-3 class of PSL2(8) squared misses the unipotents") {
    const Fixture f("psl:2:8");
    const auto threes = f.t.order_p_classes(3);
    REQUIRE(threes.size() == 1);
    const auto twos = f.t.order_p_classes(2);
    REQUIRE(twos.size() == 1); // 63 involutions, one class
    CHECK(kappa(f.t, {threes[0], threes[0]}, twos[0]).value == 0);
    CHECK_FALSE(membership(f.t, {threes[0], threes[0]}, twos[0]));

    // ... and hits everything else
    const auto supp = product_support(f.t, threes[0], threes[0]);
    std::vector<std::size_t> expect;
    for (std::size_t d = 0; d < f.t.count(); ++d)
        if (d != twos[0]) expect.push_back(d);
    CHECK(supp == expect);
}

TEST_CASE("kappa against the brute-force pair count") {
    for (const char* spec : {"an:5", "psl:2:7"}) {
        const Fixture f(spec);
        for (std::size_t c1 = 0; c1 < f.t.count(); ++c1)
            for (std::size_t c2 = 0; c2 < f.t.count(); ++c2)
                for (std::size_t d = 0; d < f.t.count(); ++d) {
                    const auto n = count_oracle(f.G, f.cd, c1, c2, d);
                    CHECK(solution_count(f.t, kappa(f.t, {c1, c2}, d)) == Rational(n));
                }
    }
}

TEST_CASE("two distinct 5-cycle classes of A5") {
    const Fixture f("an:5");
    const auto fives = f.t.order_p_classes(5);
    REQUIRE(fives.size() == 2);
    const std::size_t double_transposition = f.t.order_p_classes(2).at(0);
    const auto sc = kappa(f.t, {fives[0], fives[1]}, double_transposition);
    const auto n = count_oracle(f.G, f.cd, fives[0], fives[1], double_transposition);
    CHECK(sc.value == Rational(f.t.group_order * n) / Rational(12 * 12));
    CHECK(n > 0);
}

TEST_CASE("kappa is symmetric in its classes") {
    const Fixture f("psl:2:7");
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::size_t> cs = {rng() % f.t.count(), rng() % f.t.count(),
                                       rng() % f.t.count()};
        const std::size_t d = rng() % f.t.count();
        const Rational v = kappa(f.t, cs, d).value;
        std::sort(cs.begin(), cs.end());
        do {
            CHECK(kappa(f.t, cs, d).value == v);
        } while (std::next_permutation(cs.begin(), cs.end()));
    }
}

TEST_CASE("support basics and monotonicity") {
    const Fixture f("an:5");
    const std::size_t idc = f.t.identity_class();
    for (std::size_t d = 0; d < f.t.count(); ++d)
        CHECK(product_support(f.t, idc, d) == std::vector<std::size_t>{d});

    // layer k support is contained in layer k+2 support (insert x x^{-1})
    const auto threes = f.t.order_p_classes(3);
    REQUIRE(threes.size() == 1);
    const std::size_t c = threes[0];
    std::vector<std::size_t> layer1 = {c};
    SupportCache cache(f.t);
    auto step = [&](const std::vector<std::size_t>& layer) {
        std::vector<std::size_t> next;
        for (std::size_t a : layer)
            for (std::size_t b : cache.support(a, c))
                if (!std::count(next.begin(), next.end(), b)) next.push_back(b);
        std::sort(next.begin(), next.end());
        return next;
    };
    const auto layer2 = step(layer1);
    const auto layer3 = step(layer2);
    const auto layer4 = step(layer3);
    CHECK(std::includes(layer3.begin(), layer3.end(), layer1.begin(), layer1.end()));
    CHECK(std::includes(layer4.begin(), layer4.end(), layer2.begin(), layer2.end()));

    // 5-cycle class squared: character support agrees with the oracle
    const auto fives = f.t.order_p_classes(5);
    std::vector<std::size_t> oracle_supp;
    for (std::size_t d = 0; d < f.t.count(); ++d)
        if (count_oracle(f.G, f.cd, fives[0], fives[0], d) > 0) oracle_supp.push_back(d);
    CHECK(product_support(f.t, fives[0], fives[0]) == oracle_supp);
}

TEST_CASE("argument validation") {
    const Fixture f("an:5");
    CHECK_THROWS_AS(kappa(f.t, {}, 0), error);
    CHECK_THROWS_AS(kappa(f.t, {9}, 0), error);
    CHECK_THROWS_AS(kappa(f.t, {0}, 9), error);
}
