#pragma once

#include "pwidth/frobenius.hpp"

namespace pw {

struct CycleTypeCheck {
    std::string class_name;
    std::vector<int> cycle_type; // of the class representative
    bool predicted = false;      // the sufficient cube-covering conditions hold
    bool cube_covers = false;    // exhaustive: C^3 meets every class
};

// every class of an enumerated alternating (permutation) group, with the
// cube-covering prediction and its brute-force confirmation
std::vector<CycleTypeCheck> dvir_scan(const FiniteGroup& G, const ClassData& cd);

struct PowerCover {
    bool square_covers = false; // every class meets I_p(G)^2
    bool cube_covers = false;   // every class meets I_p(G)^3
};

PowerCover ip_power_cover(const FiniteGroup& G, const ClassData& cd, long long p);

} // namespace pw
