#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pwidth/cyclotomic.hpp"
#include "pwidth/group.hpp"

namespace pw {

// Class description carried by a character table. Self-contained so that
// tables loaded from files work exactly like freshly computed ones.
struct TableClass {
    std::string name;
    std::uint64_t size = 1;
    long long element_order = 1;
    std::size_t inverse = 0;
    // class of rep^p for each prime p dividing the group exponent
    std::map<long long, std::size_t> prime_power;
};

struct CharTable {
    std::string group_name;
    std::uint64_t group_order = 0;
    long long exponent = 1;
    std::vector<TableClass> classes;
    // values[i][j] = chi_i(g_j); row 0 after sorting is the trivial character
    std::vector<std::vector<Cyclotomic>> values;

    std::size_t count() const { return classes.size(); }
    std::size_t identity_class() const;
    Rational degree(std::size_t i) const { return values[i][identity_class()].rational_value(); }
    std::uint64_t centralizer_order(std::size_t j) const { return group_order / classes[j].size; }
    std::optional<std::size_t> class_index(const std::string& name) const;
    std::vector<std::size_t> order_p_classes(long long p) const;

    // Throws on any violation: class equation, integral degrees with
    // sum-of-squares |G|, exact row and column orthogonality, power-map
    // completeness for the primes dividing the exponent.
    void validate() const;
};

// entry [j][m] = #{(x, y) in C_i x C_j : x y = z_m} for the fixed class
// representative z_m
using ClassMatrix = std::vector<std::vector<std::uint64_t>>;

ClassMatrix class_matrix(const FiniteGroup& G, const ClassData& cd, std::size_t i);
std::vector<ClassMatrix> class_matrices(const FiniteGroup& G, const ClassData& cd);

// Exact irreducible character table of an enumerated group, computed by the
// modular eigenvector method and validated before return. Characters are
// sorted by degree, then by value columns; deterministic.
CharTable dixon_table(const FiniteGroup& G, const ClassData& cd, const std::string& group_name);

} // namespace pw
