#include "pwidth/frobenius.hpp"

#include <algorithm>

namespace pw {

StructureConstant kappa(const CharTable& t, const std::vector<std::size_t>& classes,
                        std::size_t target) {
    if (classes.empty()) throw error("kappa needs at least one class");
    const std::size_t k = t.count();
    for (std::size_t c : classes)
        if (c >= k) throw error("class index out of range");
    if (target >= k) throw error("target class index out of range");

    const std::size_t target_inv = t.classes[target].inverse;
    Cyclotomic total;
    for (std::size_t i = 0; i < k; ++i) {
        Cyclotomic term = t.values[i][classes[0]];
        for (std::size_t c = 1; c < classes.size(); ++c) term *= t.values[i][classes[c]];
        term *= t.values[i][target_inv];
        const Rational d = t.degree(i);
        Rational div = 1;
        for (std::size_t c = 1; c < classes.size(); ++c) div *= d;
        term /= div;
        total += term;
    }
    if (!total.is_rational())
        throw error("structure constant failed to reduce to a rational");
    StructureConstant sc;
    sc.classes = classes;
    sc.target = target;
    sc.value = total.rational_value();
    if (sc.value < 0) throw error("structure constant is negative");
    return sc;
}

bool membership(const CharTable& t, const std::vector<std::size_t>& classes, std::size_t target) {
    return kappa(t, classes, target).value != 0;
}

Rational solution_count(const CharTable& t, const StructureConstant& sc) {
    Rational n = sc.value / Rational(t.group_order);
    for (std::size_t c : sc.classes) n *= Rational(t.classes[c].size);
    if (boost::multiprecision::denominator(n) != 1 || n < 0)
        throw error("solution count is not a nonnegative integer");
    return n;
}

std::uint64_t count_oracle(const FiniteGroup& G, const ClassData& cd, std::size_t c1,
                           std::size_t c2, std::size_t target) {
    if (c1 >= cd.count() || c2 >= cd.count() || target >= cd.count())
        throw error("class index out of range");
    const std::uint32_t z = cd.cls(target).representative;
    std::uint64_t n = 0;
    for (const std::uint32_t x : cd.cls(c1).members) {
        const std::uint32_t y = G.mul(G.inv(x), z);
        if (cd.class_of(y) == c2) ++n;
    }
    return n;
}

std::vector<std::size_t> product_support(const CharTable& t, std::size_t c1, std::size_t c2) {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < t.count(); ++d)
        if (membership(t, {c1, c2}, d)) out.push_back(d);
    return out;
}

std::vector<std::size_t> support_oracle(const FiniteGroup& G, const ClassData& cd, std::size_t c1,
                                        std::size_t c2) {
    if (c1 >= cd.count() || c2 >= cd.count()) throw error("class index out of range");
    std::vector<char> hit(cd.count(), 0);
    // iterate the smaller class against a fixed member of the other; either
    // orientation sees every class of the (conjugation-invariant) product
    if (cd.cls(c1).size < cd.cls(c2).size) {
        const std::uint32_t y = cd.cls(c2).representative;
        for (const std::uint32_t x : cd.cls(c1).members) hit[cd.class_of(G.mul(x, y))] = 1;
    } else {
        const std::uint32_t x = cd.cls(c1).representative;
        for (const std::uint32_t y : cd.cls(c2).members) hit[cd.class_of(G.mul(x, y))] = 1;
    }
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < cd.count(); ++d)
        if (hit[d]) out.push_back(d);
    return out;
}

const std::vector<std::size_t>& SupportCache::support(std::size_t c1, std::size_t c2) {
    const auto key = std::minmax(c1, c2);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, product_support(*t_, key.first, key.second)).first;
    return it->second;
}

} // namespace pw
