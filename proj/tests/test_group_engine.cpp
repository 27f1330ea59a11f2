#include <doctest.h>

#include <map>
#include <random>

#include "pwidth/matgrp.hpp"

using namespace pw;

namespace {

FiniteGroup alternating(int n) { return realize_group(GroupSpec::parse("an:" + std::to_string(n))); }

// Independent element-order census: a direct pass over all elements.
std::map<long long, std::size_t> order_census(const FiniteGroup& G) {
    std::map<long long, std::size_t> census;
    for (std::uint32_t i = 0; i < G.size(); ++i) ++census[G.element_order(i)];
    return census;
}

} // namespace

TEST_CASE("enumeration basics") {
    const auto a5 = alternating(5);
    CHECK(a5.size() == 60);

    // empty generator set -> trivial group
    FiniteGroup trivial(std::make_shared<PermOps>(4), {});
    CHECK(trivial.size() == 1);

    const auto psl28 = realize_group(GroupSpec::parse("psl:2:8"));
    CHECK(psl28.size() == 504);
}

TEST_CASE("conjugacy classes of A5") {
    const auto a5 = alternating(5);
    ClassData cd(a5);
    REQUIRE(cd.count() == 5);
    std::multiset<std::uint64_t> sizes;
    for (const auto& c : cd.all()) sizes.insert(c.size);
    CHECK(sizes == std::multiset<std::uint64_t>{1, 15, 20, 12, 12});
    CHECK(cd.cls(0).name == "1A");
    CHECK(cd.exponent() == 30);

    // order-p classes
    CHECK(cd.order_p_classes(5).size() == 2);
    CHECK(cd.order_p_classes(2).size() == 1);
    CHECK(cd.order_p_classes(7).empty());
}

TEST_CASE("PSL2(8) has nine classes and a unique order-3 class") {
    const auto g = realize_group(GroupSpec::parse("psl:2:8"));
    ClassData cd(g);
    CHECK(cd.count() == 9);
    CHECK(cd.order_p_classes(3).size() == 1);
}

TEST_CASE("SL4(2) has a unique class of order-5 elements") {
    const auto g = realize_group(GroupSpec::parse("sl:4:2"));
    ClassData cd(g);
    CHECK(cd.order_p_classes(5).size() == 1);
}

TEST_CASE("class equation and power maps") {
    for (const char* spec : {"an:5", "an:6", "psl:2:7"}) {
        const auto G = realize_group(GroupSpec::parse(spec));
        ClassData cd(G);
        std::uint64_t total = 0;
        for (const auto& c : cd.all()) {
            total += c.size;
            CHECK(G.size() % c.size == 0);
        }
        CHECK(total == G.size());

        // power-map consistency on random members
        std::mt19937 rng(7);
        for (std::size_t ci = 0; ci < cd.count(); ++ci) {
            const auto& c = cd.cls(ci);
            for (int t = 0; t < 20; ++t) {
                const std::uint32_t x = c.members[rng() % c.members.size()];
                CHECK(cd.class_of(x) == ci);
                for (const auto& [p, target] : c.prime_power) {
                    std::uint32_t xp = G.identity_index();
                    for (long long s = 0; s < p % c.element_order; ++s) xp = G.mul(xp, x);
                    CHECK(cd.class_of(xp) == target);
                }
            }
            // inverse map is an involution
            CHECK(cd.cls(c.inverse_class).inverse_class == ci);
        }
    }
}

TEST_CASE("element-order distribution matches an independent census") {
    // fixed expected values computed from the census pass itself frozen below
    const auto a5 = alternating(5);
    CHECK(order_census(a5) ==
          std::map<long long, std::size_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
    const auto a6 = alternating(6);
    CHECK(order_census(a6) ==
          std::map<long long, std::size_t>{{1, 1}, {2, 45}, {3, 80}, {4, 90}, {5, 144}});
    const auto psl27 = realize_group(GroupSpec::parse("psl:2:7"));
    CHECK(order_census(psl27) ==
          std::map<long long, std::size_t>{{1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}});

    // census agrees with the class partition
    for (const auto* spec : {"an:5", "an:6", "psl:2:7"}) {
        const auto G = realize_group(GroupSpec::parse(spec));
        const auto census = order_census(G);
        ClassData cd(G);
        std::map<long long, std::size_t> from_classes;
        for (const auto& c : cd.all()) from_classes[c.element_order] += c.size;
        CHECK(census == from_classes);
    }
}

TEST_CASE("abelian group classes are singletons") {
    // cyclic group of order 6 as a permutation group
    auto ops = std::make_shared<PermOps>(6);
    FiniteGroup c6(ops, {PermOps::key_of(Permutation::parse(6, "(1,2,3,4,5,6)"))});
    CHECK(c6.size() == 6);
    ClassData cd(c6);
    CHECK(cd.count() == 6);
    for (const auto& c : cd.all()) CHECK(c.size == 1);
}

TEST_CASE("enumeration bound is enforced") {
    CHECK_THROWS_AS(realize_group(GroupSpec::parse("an:8"), 1000), bound_exceeded);
}
