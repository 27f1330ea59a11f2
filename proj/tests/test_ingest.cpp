#include <doctest.h>

#include <algorithm>

#include "pwidth/chartab.hpp"
#include "pwidth/ctbl.hpp"
#include "pwidth/matgrp.hpp"
#include "pwidth/width.hpp"

using namespace pw;

namespace {

CharTable computed_table(const std::string& spec) {
    const auto G = realize_group(GroupSpec::parse(spec));
    const ClassData cd(G);
    return dixon_table(G, cd, spec);
}

} // namespace

TEST_CASE("serialized table round-trips bit-exactly") {
    for (const std::string spec : {"an:5", "psl:2:7"}) {
        const auto t = computed_table(spec);
        const std::string doc = serialize_table(t);
        const auto back = parse_table(doc); // validate() runs inside
        CHECK(serialize_table(back) == doc);
        CHECK(back.group_name == t.group_name);
        CHECK(back.group_order == t.group_order);
        CHECK(back.exponent == t.exponent);
        CHECK(back.count() == t.count());
    }
}

TEST_CASE("serialization is canonical and deterministic") {
    const auto t = computed_table("an:5");
    CHECK(serialize_table(t) == serialize_table(t));

    // scrambling the class order must not change the canonical form
    auto scrambled = t;
    const std::size_t k = t.count();
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = (i + 2) % k;
    std::vector<std::size_t> inv_perm(k);
    for (std::size_t i = 0; i < k; ++i) inv_perm[perm[i]] = i;
    for (std::size_t i = 0; i < k; ++i) {
        scrambled.classes[i] = t.classes[perm[i]];
        scrambled.classes[i].inverse = inv_perm[t.classes[perm[i]].inverse];
        for (auto& [p, j] : scrambled.classes[i].prime_power) j = inv_perm[j];
        for (std::size_t r = 0; r < k; ++r) scrambled.values[r][i] = t.values[r][perm[i]];
    }
    scrambled.validate();
    CHECK(serialize_table(scrambled) == serialize_table(t));
}

TEST_CASE("parser rejects malformed documents") {
    CHECK_THROWS_WITH_AS(parse_table(""), doctest::Contains("empty"), error);
    CHECK_THROWS_WITH_AS(parse_table("group X\norder 60\n"),
                         doctest::Contains("unexpected end"), error);
    CHECK_THROWS_WITH_AS(parse_table("banana X\n"), doctest::Contains("expected 'group'"), error);

    const std::string doc = serialize_table(computed_table("an:5"));
    CHECK_THROWS_WITH_AS(parse_table(doc + "junk\n"), doctest::Contains("trailing"), error);

    // tamper a class size: syntax fine, class equation broken
    std::string tampered = doc;
    const auto pos = tampered.find("size 15");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 7, "size 20");
    CHECK_THROWS_WITH_AS(parse_table(tampered), doctest::Contains("class equation"), error);

    CHECK_THROWS_AS(load_table("/nonexistent/path.ctbl"), error);
}

TEST_CASE("computed tables of larger groups pass through the text format") {
    const auto t = computed_table("m11");
    const auto back = parse_table(serialize_table(t));
    CHECK(back.group_order == 7920);
    CHECK(back.count() == 10);
}

TEST_CASE("loaded tables drive the width machinery identically") {
    for (const auto& [spec, p] : std::vector<std::pair<std::string, long long>>{
             {"an:5", 3}, {"psl:2:8", 3}, {"psl:2:8", 7}}) {
        const auto G = realize_group(GroupSpec::parse(spec));
        const ClassData cd(G);
        const auto t = dixon_table(G, cd, spec);
        const auto loaded = parse_table(serialize_table(t));

        const auto a = p_width_table(t, p);
        const auto b = p_width_table(loaded, p);
        CHECK(a.width == b.width);
        CHECK(a.outside_square == b.outside_square);
        REQUIRE(a.per_class.size() == b.per_class.size());
        for (std::size_t i = 0; i < a.per_class.size(); ++i) {
            CHECK(a.per_class[i].name == b.per_class[i].name);
            CHECK(a.per_class[i].min_k == b.per_class[i].min_k);
        }
    }
}
