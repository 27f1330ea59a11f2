#include <doctest.h>

#include <set>

#include "pwidth/chartab.hpp"
#include "pwidth/matgrp.hpp"

using namespace pw;

namespace {

CharTable table_of(const char* spec) {
    const auto G = realize_group(GroupSpec::parse(spec));
    const ClassData cd(G);
    return dixon_table(G, cd, GroupSpec::parse(spec).describe());
}

std::multiset<long long> degrees_of(const CharTable& t) {
    std::multiset<long long> ds;
    for (std::size_t i = 0; i < t.count(); ++i)
        ds.insert(static_cast<long long>(boost::multiprecision::numerator(t.degree(i))));
    return ds;
}

} // namespace

TEST_CASE("class matrices") {
    const auto G = realize_group(GroupSpec::parse("an:5"));
    const ClassData cd(G);
    const auto mats = class_matrices(G, cd);
    REQUIRE(mats.size() == 5);

    const std::size_t idc = cd.identity_class();
    // the trivial class acts as the identity matrix
    for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t m = 0; m < 5; ++m)
            CHECK(mats[idc][j][m] == (j == m ? 1u : 0u));

    for (std::size_t i = 0; i < 5; ++i) {
        // xy = 1 forces y = x^{-1}: the identity column counts |C_i| on the
        // inverse class row and nothing else
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(mats[i][j][idc] == (j == cd.cls(i).inverse_class ? cd.cls(i).size : 0u));
        // row sums against class sizes: sum_m a_ijm |C_m| = |C_i||C_j|
        for (std::size_t j = 0; j < 5; ++j) {
            std::uint64_t s = 0;
            for (std::size_t m = 0; m < 5; ++m) s += mats[i][j][m] * cd.cls(m).size;
            CHECK(s == cd.cls(i).size * cd.cls(j).size);
        }
    }
}

TEST_CASE("cyclic group of order 3") {
    auto ops = std::make_shared<PermOps>(3);
    const FiniteGroup c3(ops, {PermOps::key_of(Permutation::parse(3, "(1,2,3)"))});
    const ClassData cd(c3);
    const auto t = dixon_table(c3, cd, "C3");
    REQUIRE(t.count() == 3);
    CHECK(degrees_of(t) == std::multiset<long long>{1, 1, 1});
    // rows are exactly the powers of a cube root of unity
    const Cyclotomic z = Cyclotomic::root_of_unity(3, 1);
    std::set<std::string> seen;
    for (const auto& row : t.values) seen.insert(row[1].to_string());
    CHECK(seen == std::set<std::string>{Cyclotomic(1).to_string(), z.to_string(),
                                        (z * z).to_string()});
}

TEST_CASE("A5 character table") {
    const auto t = table_of("an:5");
    CHECK(degrees_of(t) == std::multiset<long long>{1, 3, 3, 4, 5});
    // trivial character first after sorting
    for (std::size_t j = 0; j < t.count(); ++j) CHECK(t.values[0][j] == Cyclotomic(1));
    // the two degree-3 characters take golden-ratio values on the 5-cycles:
    // irrational entries of conductor 5
    bool irrational_seen = false;
    for (std::size_t i = 0; i < t.count(); ++i)
        for (std::size_t j = 0; j < t.count(); ++j)
            if (!t.values[i][j].is_rational()) {
                CHECK(t.values[i][j].conductor() == 5);
                irrational_seen = true;
            }
    CHECK(irrational_seen);
}

TEST_CASE("PSL2(8) character table") {
    const auto t = table_of("psl:2:8");
    REQUIRE(t.count() == 9);
    CHECK(degrees_of(t) == std::multiset<long long>{1, 7, 7, 7, 7, 8, 9, 9, 9});
    std::uint64_t sq = 0;
    for (std::size_t i = 0; i < 9; ++i) {
        const auto d = static_cast<std::uint64_t>(boost::multiprecision::numerator(t.degree(i)));
        sq += d * d;
    }
    CHECK(sq == 504);
}

TEST_CASE("nonabelian tables validate and are deterministic") {
    for (const char* spec : {"an:5", "psl:2:7", "sl:2:3"}) {
        const auto G = realize_group(GroupSpec::parse(spec));
        const ClassData cd(G);
        const auto t1 = dixon_table(G, cd, "g");
        const auto t2 = dixon_table(G, cd, "g");
        REQUIRE(t1.count() == t2.count());
        for (std::size_t i = 0; i < t1.count(); ++i)
            for (std::size_t j = 0; j < t1.count(); ++j)
                CHECK(t1.values[i][j] == t2.values[i][j]);
        CHECK_NOTHROW(t1.validate());
    }
}

TEST_CASE("validation rejects tampered tables") {
    auto t = table_of("an:5");
    SUBCASE("class size") {
        t.classes[1].size = 20; // still divides 60, breaks the class equation
        CHECK_THROWS_WITH_AS(t.validate(), "class equation violated", error);
    }
    SUBCASE("character value") {
        t.values[2][3] += Cyclotomic(1);
        CHECK_THROWS_AS(t.validate(), error);
    }
    SUBCASE("power map dropped") {
        for (auto& c : t.classes) c.prime_power.clear();
        CHECK_THROWS_AS(t.validate(), error);
    }
}
