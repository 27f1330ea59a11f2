#include "pwidth/altclass.hpp"

#include <algorithm>

#include "pwidth/alternating.hpp"

namespace pw {

namespace {

int permutation_degree(const FiniteGroup& G) {
    const auto* ops = dynamic_cast<const PermOps*>(&G.ops());
    if (!ops) throw error("expected a permutation group");
    return ops->degree();
}

std::vector<std::size_t> fold_support(const FiniteGroup& G, const ClassData& cd,
                                      const std::vector<std::size_t>& left,
                                      const std::vector<std::size_t>& right) {
    std::vector<char> hit(cd.count(), 0);
    for (std::size_t a : left)
        for (std::size_t b : right)
            for (std::size_t d : support_oracle(G, cd, a, b)) hit[d] = 1;
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < cd.count(); ++d)
        if (hit[d]) out.push_back(d);
    return out;
}

} // namespace

std::vector<CycleTypeCheck> dvir_scan(const FiniteGroup& G, const ClassData& cd) {
    const int n = permutation_degree(G);
    std::vector<CycleTypeCheck> out;
    for (std::size_t c = 0; c < cd.count(); ++c) {
        CycleTypeCheck check;
        check.class_name = cd.cls(c).name;
        check.cycle_type =
            PermOps::perm_of(G.element(cd.cls(c).representative)).cycle_type();
        check.predicted = !check.cycle_type.empty() && dvir_cubes(check.cycle_type, n);
        const auto square = support_oracle(G, cd, c, c);
        check.cube_covers = fold_support(G, cd, square, {c}).size() == cd.count();
        out.push_back(std::move(check));
    }
    return out;
}

PowerCover ip_power_cover(const FiniteGroup& G, const ClassData& cd, long long p) {
    const auto raw = cd.order_p_classes(p);
    if (raw.empty()) throw error("the group has no elements of order " + std::to_string(p));
    const std::vector<std::size_t> ip(raw.begin(), raw.end());
    PowerCover pc;
    const auto square = fold_support(G, cd, ip, ip);
    pc.square_covers = square.size() == cd.count();
    pc.cube_covers = fold_support(G, cd, square, ip).size() == cd.count();
    return pc;
}

} // namespace pw
