#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pwidth/error.hpp"

namespace pw {

// Statistics of the disjoint cycle decomposition: moved points, number of
// nontrivial cycles, fixed points and r = |support| - (nontrivial cycles).
struct CycleStats {
    int support_size = 0;
    int nontrivial_cycles = 0;
    int fixed_points = 0;
    int r_value = 0;

    bool operator==(const CycleStats&) const = default;
};

// A permutation of {1,...,n}, stored in image form. Immutable value type.
//
// Composition convention: the LEFT factor acts FIRST, i.e.
// (g*h)(i) = h(g(i)). Points are 1-based in all I/O; the internal
// representation is 0-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> images_zero_based);

    static Permutation identity(int degree);

    // Cycles are given with 1-based points, e.g. {{1,2,3},{4,5}}.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    // Parses cycle notation such as "(1,2,3)(4,5)" or "()"; whitespace
    // tolerated. The degree is always explicit.
    static Permutation parse(int degree, const std::string& text);

    int degree() const { return static_cast<int>(img_.size()); }

    // 1-based application.
    int apply(int point) const;

    // 0-based access.
    int image0(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images0() const { return img_; }

    bool is_identity() const;

    Permutation inverse() const;
    Permutation power(long long e) const;

    long long order() const;
    bool is_even() const;

    // Nontrivial cycles, 1-based, each rotated to start at its minimum,
    // sorted by that minimum.
    std::vector<std::vector<int>> cycles() const;

    // Lengths (>= 2) of the nontrivial cycles, sorted descending.
    std::vector<int> cycle_type() const;

    CycleStats stats() const;

    std::string to_cycle_string() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

// (g*h)(i) = h(g(i)): g acts first.
Permutation compose(const Permutation& g, const Permutation& h);

// Relabelling of g by h: the result maps h(i) -> h(g(i)); equals
// inverse(h)*g*h under the left-acts-first convention.
Permutation conjugate(const Permutation& g, const Permutation& h);

} // namespace pw
