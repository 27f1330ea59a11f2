#include "pwidth/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace pw {

Permutation::Permutation(std::vector<int> images_zero_based) : img_(std::move(images_zero_based)) {
    const int n = degree();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : img_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw error("permutation images are not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 0) throw error("negative degree");
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(static_cast<std::size_t>(degree), 0);
    for (const auto& cyc : cycles) {
        for (int pt : cyc) {
            if (pt < 1 || pt > degree) throw error("cycle point out of range");
            if (used[static_cast<std::size_t>(pt - 1)]) throw error("repeated point in cycles");
            used[static_cast<std::size_t>(pt - 1)] = 1;
        }
        const std::size_t l = cyc.size();
        for (std::size_t i = 0; i < l; ++i)
            img[static_cast<std::size_t>(cyc[i] - 1)] = cyc[(i + 1) % l] - 1;
    }
    return Permutation(std::move(img));
}

Permutation Permutation::parse(int degree, const std::string& text) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) throw error("empty permutation text");
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw error("expected '(' in cycle notation");
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw error("expected point in cycle notation");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            cyc.push_back(v);
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
        }
        if (i == text.size()) throw error("unterminated cycle");
        ++i; // ')'
        if (cyc.size() >= 2) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return from_cycles(degree, cycles);
}

int Permutation::apply(int point) const {
    if (point < 1 || point > degree()) throw error("point out of range");
    return img_[static_cast<std::size_t>(point - 1)] + 1;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        inv[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

Permutation Permutation::power(long long e) const {
    if (e < 0) return inverse().power(-e);
    Permutation acc = identity(degree());
    Permutation base = *this;
    while (e > 0) {
        if (e & 1) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

long long Permutation::order() const {
    long long ord = 1;
    for (int l : cycle_type()) ord = std::lcm(ord, static_cast<long long>(l));
    return ord;
}

bool Permutation::is_even() const {
    int transpositions = 0;
    for (int l : cycle_type()) transpositions += l - 1;
    return transpositions % 2 == 0;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    const int n = degree();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)] || img_[static_cast<std::size_t>(s)] == s) continue;
        std::vector<int> cyc;
        int x = s;
        do {
            seen[static_cast<std::size_t>(x)] = 1;
            cyc.push_back(x + 1);
            x = img_[static_cast<std::size_t>(x)];
        } while (x != s);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> type;
    for (const auto& c : cycles()) type.push_back(static_cast<int>(c.size()));
    std::sort(type.rbegin(), type.rend());
    return type;
}

CycleStats Permutation::stats() const {
    CycleStats s;
    for (const auto& c : cycles()) {
        s.support_size += static_cast<int>(c.size());
        s.nontrivial_cycles += 1;
    }
    s.fixed_points = degree() - s.support_size;
    s.r_value = s.support_size - s.nontrivial_cycles;
    return s;
}

std::string Permutation::to_cycle_string() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ',';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

Permutation compose(const Permutation& g, const Permutation& h) {
    if (g.degree() != h.degree()) throw error("degree mismatch in compose");
    std::vector<int> img(static_cast<std::size_t>(g.degree()));
    for (int i = 0; i < g.degree(); ++i)
        img[static_cast<std::size_t>(i)] = h.image0(g.image0(i));
    return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& g, const Permutation& h) {
    if (g.degree() != h.degree()) throw error("degree mismatch in conjugate");
    std::vector<int> img(static_cast<std::size_t>(g.degree()));
    for (int i = 0; i < g.degree(); ++i)
        img[static_cast<std::size_t>(h.image0(i))] = h.image0(g.image0(i));
    return Permutation(std::move(img));
}

} // namespace pw
