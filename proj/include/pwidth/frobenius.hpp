#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pwidth/chartab.hpp"

namespace pw {

// The normalised structure constant for a tuple of classes and a target
// class: kappa = sum over irreducible chi of
//   chi(g_1) ... chi(g_k) chi(g^{-1}) / chi(1)^{k-1}.
// It is nonzero exactly when the target meets the class product, and
// kappa * |C_1| ... |C_k| / |G| is the literal solution count.
struct StructureConstant {
    std::vector<std::size_t> classes;
    std::size_t target = 0;
    Rational value;
};

StructureConstant kappa(const CharTable& t, const std::vector<std::size_t>& classes,
                        std::size_t target);

// target class meets C_1 ... C_k, decided by an exact zero test on kappa
bool membership(const CharTable& t, const std::vector<std::size_t>& classes, std::size_t target);

// exact number of solutions to kappa's counting problem for k = 2
Rational solution_count(const CharTable& t, const StructureConstant& sc);

// brute-force pair count #{(x, y) in C1 x C2 : x y = z} for the fixed class
// representative z of the target; independent of any character data
std::uint64_t count_oracle(const FiniteGroup& G, const ClassData& cd, std::size_t c1,
                           std::size_t c2, std::size_t target);

// classes meeting C1 * C2, ascending
std::vector<std::size_t> product_support(const CharTable& t, std::size_t c1, std::size_t c2);

// the same support without character data: C1 C2 is conjugation-invariant,
// so one fixed element of C1 against all of C2 sees every class in it
std::vector<std::size_t> support_oracle(const FiniteGroup& G, const ClassData& cd, std::size_t c1,
                                        std::size_t c2);

// memoized pairwise supports over one table
class SupportCache {
public:
    explicit SupportCache(const CharTable& t) : t_(&t) {}
    const CharTable& table() const { return *t_; }
    const std::vector<std::size_t>& support(std::size_t c1, std::size_t c2);

private:
    const CharTable* t_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> cache_;
};

} // namespace pw
