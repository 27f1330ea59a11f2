#pragma once

#include <utility>
#include <vector>

#include "pwidth/cyclotomic.hpp"
#include "pwidth/permutation.hpp"

namespace pw {

// h written as x * y with x^3 = y^3 = 1, both even
struct ThreeFactorWitness {
    Permutation input;
    Permutation x;
    Permutation y;

    // throws unless compose(x, y) == input, both factors cube to the
    // identity and both are even
    void verify() const;
};

// (1,...,l) = (1,2,3) * (4,...,l,1); for l = 4 the second factor is the
// transposition (4,1)
std::pair<Permutation, Permutation> break_left(int l);

// (1,...,l) = (l-2,1,2,...,l-3) * (1,l-1,l)
std::pair<Permutation, Permutation> break_right(int l);

// order-3 two-factor witness for the l-cycle (1,...,l), l odd >= 5; each
// factor is a product of pairwise disjoint 3-cycles
ThreeFactorWitness odd_cycle_factors(int l);

// witness for a product of two disjoint even cycles, given as label
// sequences inside Sym(n); the central transpositions left by splitting each
// cycle are spliced into a pair of 3-cycles
ThreeFactorWitness even_pair_factors(int n, const std::vector<int>& cycle1,
                                     const std::vector<int>& cycle2);

// witness for an arbitrary even permutation: odd cycles split individually,
// even cycles paired in decreasing length order, 3-cycles collected directly
ThreeFactorWitness w3_witness(const Permutation& h);

// sufficient conditions for the cube of a class to be all of A_n: no cycle
// of length 2^k with k > 1, not a fixed-point-free involution class, and
// r(C) >= (n-1)/2; true is a guarantee, false is inconclusive
bool dvir_cubes(const std::vector<int>& cycle_type, int n);

// for cycle type (p^k, 1^(n-kp)): n < (k+1)p guarantees the cube covers A_n
bool cor25_bound(long long p, long long k, long long n);

// the integers n with (4p+3)/3 < n < 2p, where squares of the order-p part
// cannot cover A_n; empty for p = 3
std::vector<long long> bertram_gap(long long p);

// exact evaluation of the two covering conditions:
//   (1)  c*(g) + fix(g) < (1/4 - eps) n
//   (2)  fix(g^2) < n^(1/4 - eps)
// condition (2) via cross-multiplied integer powers, no floating point
std::pair<bool, bool> ls_conditions(const Permutation& g, const Rational& epsilon);

struct AsymptoticThresholds {
    long long p = 0;
    // p = 3 is fully handled by the constructive 3-width machinery; the
    // numeric thresholds only exist for p >= 5
    bool constructive_case = false;
    Rational epsilon; // 1/p^2
    Rational N1;      // (4p^3 - 4p^2) / (p^2 - 4p - 4)
    Int N2;           // least n with (p-1) < n^(1/4 - 1/p^2)
};

AsymptoticThresholds thresholds(long long p);

} // namespace pw
