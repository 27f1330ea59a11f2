#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pwidth/frobenius.hpp"

namespace pw {

enum class WidthMethod { characters, counting, both };

struct ClassWidth {
    std::size_t class_index = 0;
    std::string name;
    long long element_order = 1;
    int min_k = 0; // least k with the class inside the k-fold product of order-p elements
};

// one exact structure-constant fact backing a width claim
struct KappaEvidence {
    std::vector<std::string> tuple;
    std::string target;
    Rational value;
    std::optional<std::uint64_t> oracle_count;
};

struct WidthCertificate {
    std::string group;
    long long p = 0;
    int width = 0;
    bool single_class = false;
    std::vector<std::string> generating_classes; // the layer-1 classes
    std::vector<ClassWidth> per_class;           // identity listed with min_k = 0
    std::vector<std::string> outside_square;     // nontrivial classes not in I_p^2
    std::vector<KappaEvidence> evidence;
};

// width from a character table alone (works for loaded tables too);
// restrict_to limits layer 1 to a single class
WidthCertificate p_width_table(const CharTable& t, long long p,
                               std::optional<std::size_t> restrict_to = std::nullopt);

// width of an enumerated group; "counting" avoids character theory entirely,
// "both" additionally cross-checks the two per-class results
WidthCertificate p_width(const FiniteGroup& G, const ClassData& cd, long long p,
                         WidthMethod method, const std::string& group_name,
                         std::optional<std::size_t> restrict_to = std::nullopt);

// nontrivial classes outside I_p^2, each with the zero kappa evidence
// (the empty list certifies width <= 2 everywhere)
std::vector<std::string> table1_report(const CharTable& t, long long p);

struct ElementWidth {
    int k = 0;
    std::vector<std::uint32_t> factors; // element indices multiplying to g
};

// minimal k for a single element, with an explicit order-p factorization
ElementWidth width_of_element(const FiniteGroup& G, const ClassData& cd, long long p,
                              std::uint32_t g);

} // namespace pw
