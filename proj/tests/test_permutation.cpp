#include <doctest.h>

#include <random>

#include "pwidth/permutation.hpp"

using pw::CycleStats;
using pw::Permutation;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

} // namespace

TEST_CASE("composition convention: left factor acts first") {
    // (1,2,3)(4,...,l,1) = (1,...,l) at l = 5
    const auto a = Permutation::parse(5, "(1,2,3)");
    const auto b = Permutation::parse(5, "(4,5,1)");
    CHECK(compose(a, b) == Permutation::parse(5, "(1,2,3,4,5)"));

    // (l-2,1,2,...,l-3)(1,l-1,l) = (1,...,l) at l = 5
    const auto c = Permutation::parse(5, "(3,1,2)");
    const auto d = Permutation::parse(5, "(1,4,5)");
    CHECK(compose(c, d) == Permutation::parse(5, "(1,2,3,4,5)"));

    const auto g = Permutation::parse(5, "(1,4)(2,3,5)");
    CHECK(compose(g, Permutation::identity(5)) == g);
    CHECK(compose(g, g.inverse()) == Permutation::identity(5));
}

TEST_CASE("cycle stats") {
    const auto id7 = Permutation::identity(7);
    CHECK(id7.stats() == CycleStats{0, 0, 7, 0});

    const auto g = Permutation::parse(7, "(1,2,3)(4,5)");
    CHECK(g.stats() == CycleStats{5, 2, 2, 3});

    // cycle type (p^k, 1^{n-kp}) has r = k(p-1)
    const auto h = Permutation::parse(11, "(1,2,3,4,5)(6,7,8,9,10)");
    CHECK(h.stats().r_value == 2 * 4);
}

TEST_CASE("order and parity") {
    CHECK(Permutation::parse(3, "(1,2,3)").order() == 3);
    CHECK(Permutation::parse(5, "(1,2)(3,4,5)").order() == 6);
    CHECK(Permutation::identity(4).order() == 1);

    CHECK(Permutation::parse(3, "(1,2,3)").is_even());
    CHECK_FALSE(Permutation::parse(2, "(1,2)").is_even());
    CHECK(Permutation::parse(4, "(1,2)(3,4)").is_even());
}

TEST_CASE("parser and printer") {
    CHECK(Permutation::parse(5, " ( 1 , 2 , 3 ) ( 4 , 5 ) ").to_cycle_string() == "(1,2,3)(4,5)");
    CHECK(Permutation::parse(5, "()").is_identity());
    CHECK(Permutation::identity(3).to_cycle_string() == "()");
    CHECK_THROWS_AS(Permutation::parse(3, "(1,4)"), pw::error);
    CHECK_THROWS_AS(Permutation::parse(3, ""), pw::error);
    CHECK_THROWS_AS(Permutation::parse(4, "(1,2)(2,3)"), pw::error);
    CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), pw::error);
}

TEST_CASE("properties on random permutations") {
    std::mt19937 rng(20'240'401);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 100);
        const auto g = random_perm(n, rng);
        const auto h = random_perm(n, rng);

        // stats are conjugation invariant
        CHECK(conjugate(g, h).stats() == g.stats());

        // r = n - fix - c*
        const auto s = g.stats();
        CHECK(s.r_value == n - s.fixed_points - s.nontrivial_cycles);

        // parity is a homomorphism
        CHECK(compose(g, h).is_even() == (g.is_even() == h.is_even()));

        // conjugate agrees with inverse(h)*g*h
        CHECK(conjugate(g, h) == compose(compose(h.inverse(), g), h));

        // round trip through the printer
        CHECK(Permutation::parse(n, g.to_cycle_string()) == g);
    }
}
