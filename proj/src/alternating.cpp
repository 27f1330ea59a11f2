#include "pwidth/alternating.hpp"

#include <algorithm>
#include <set>

namespace pw {

void ThreeFactorWitness::verify() const {
    if (!(compose(x, y) == input)) throw error("witness factors do not multiply to the input");
    if (!x.power(3).is_identity() || !y.power(3).is_identity())
        throw error("witness factor does not cube to the identity");
    if (!x.is_even() || !y.is_even()) throw error("witness factor is odd");
    if (!input.is_identity() && x.is_identity() && y.is_identity())
        throw error("trivial witness for a nontrivial input");
}

std::pair<Permutation, Permutation> break_left(int l) {
    if (l < 4) throw error("break_left needs a cycle of length at least 4");
    std::vector<int> tail;
    for (int i = 4; i <= l; ++i) tail.push_back(i);
    tail.push_back(1);
    return {Permutation::from_cycles(l, {{1, 2, 3}}), Permutation::from_cycles(l, {tail})};
}

std::pair<Permutation, Permutation> break_right(int l) {
    if (l < 4) throw error("break_right needs a cycle of length at least 4");
    std::vector<int> head;
    head.push_back(l - 2);
    for (int i = 1; i <= l - 3; ++i) head.push_back(i);
    return {Permutation::from_cycles(l, {head}),
            Permutation::from_cycles(l, {{1, l - 1, l}})};
}

namespace {

using Cycles = std::vector<std::vector<int>>;

// the split of the standard cycle (1,...,l), transported through an
// arbitrary label sequence; position t > l wraps around to t - l
int pos(const std::vector<int>& labels, long long t) {
    const long long l = static_cast<long long>(labels.size());
    return labels[static_cast<std::size_t>((t - 1) % l)];
}

// x and y parts common to the odd and even splits
Cycles x_part(const std::vector<int>& labels, long long m) {
    const long long l = static_cast<long long>(labels.size());
    Cycles out;
    for (long long i = 0; i < (m + 1) / 2; ++i)
        out.push_back({pos(labels, l + 1 - 2 * i), pos(labels, 2 * i + 2), pos(labels, 2 * i + 3)});
    return out;
}

Cycles y_part(const std::vector<int>& labels, long long m) {
    const long long l = static_cast<long long>(labels.size());
    Cycles out;
    for (long long i = 0; i < m / 2; ++i)
        out.push_back({pos(labels, 4 + 2 * i), pos(labels, l - 2 * i), pos(labels, l - 2 * i + 1)});
    return out;
}

struct EvenSplit {
    Cycles x;
    int a = 0, b = 0; // the central transposition (a, b)
    Cycles y;
};

// break-left-first split of an even cycle: x * (a,b) * y
EvenSplit split_even_left_first(const std::vector<int>& labels) {
    const long long l = static_cast<long long>(labels.size());
    const long long m = l / 2 - 1;
    EvenSplit s;
    s.x = x_part(labels, m);
    s.a = pos(labels, 2 * ((m + 1) / 2) + 2);
    s.b = pos(labels, 2 * ((m + 1) / 2) + 3);
    s.y = y_part(labels, m);
    return s;
}

// the break-right-first variant: split the reversed cycle left-first and
// invert; which side touches the central transposition swaps over
EvenSplit split_even_right_first(const std::vector<int>& labels) {
    std::vector<int> reversed;
    reversed.push_back(labels[0]);
    for (std::size_t i = labels.size(); i-- > 1;) reversed.push_back(labels[i]);
    EvenSplit r = split_even_left_first(reversed);
    EvenSplit s;
    // inverting a product of disjoint 3-cycles reverses each cycle
    for (auto& c : r.y) s.x.push_back({c[0], c[2], c[1]});
    for (auto& c : r.x) s.y.push_back({c[0], c[2], c[1]});
    s.a = r.a;
    s.b = r.b;
    return s;
}

std::set<int> support_of(const Cycles& cs) {
    std::set<int> out;
    for (const auto& c : cs) out.insert(c.begin(), c.end());
    return out;
}

Permutation perm_of(int n, const Cycles& cs) { return Permutation::from_cycles(n, cs); }

} // namespace

ThreeFactorWitness odd_cycle_factors(int l) {
    if (l < 5 || l % 2 == 0) throw error("odd_cycle_factors needs an odd cycle length >= 5");
    std::vector<int> labels(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    const long long m = (l - 1) / 2;
    const Cycles xs = x_part(labels, m);
    const Cycles ys = y_part(labels, m);
    // the proof's support argument, made executable: 3-cycles on each side
    // must be pairwise disjoint
    if (support_of(xs).size() != 3 * xs.size() || support_of(ys).size() != 3 * ys.size())
        throw error("split 3-cycles are not disjoint");
    ThreeFactorWitness w{Permutation::from_cycles(l, {labels}), perm_of(l, xs), perm_of(l, ys)};
    w.verify();
    return w;
}

ThreeFactorWitness even_pair_factors(int n, const std::vector<int>& cycle1,
                                     const std::vector<int>& cycle2) {
    for (const auto* c : {&cycle1, &cycle2}) {
        if (c->size() < 2 || c->size() % 2 != 0)
            throw error("even_pair_factors needs even cycle lengths >= 2");
        for (int v : *c)
            if (v < 1 || v > n) throw error("cycle label out of range");
    }
    {
        std::set<int> s1(cycle1.begin(), cycle1.end()), s2(cycle2.begin(), cycle2.end());
        if (s1.size() != cycle1.size() || s2.size() != cycle2.size())
            throw error("cycle labels repeat");
        for (int v : s1)
            if (s2.count(v)) throw error("cycle supports overlap");
    }

    // candidate splits per cycle: break direction x transposition orientation,
    // validated below against the support conditions the splice needs
    auto candidates = [](const std::vector<int>& labels) {
        std::vector<EvenSplit> out;
        for (EvenSplit s : {split_even_left_first(labels), split_even_right_first(labels)}) {
            EvenSplit t = s;
            if (t.a > t.b) std::swap(t.a, t.b);
            EvenSplit u = t;
            std::swap(u.a, u.b);
            out.push_back(t);
            out.push_back(u);
        }
        return out;
    };

    const Permutation target =
        compose(Permutation::from_cycles(n, {cycle1}), Permutation::from_cycles(n, {cycle2}));
    for (const EvenSplit& s1 : candidates(cycle1))
        for (const EvenSplit& s2 : candidates(cycle2)) {
            Cycles xs = s1.x;
            xs.insert(xs.end(), s2.x.begin(), s2.x.end());
            Cycles ys = s1.y;
            ys.insert(ys.end(), s2.y.begin(), s2.y.end());
            const auto xsup = support_of(xs), ysup = support_of(ys);
            if (xsup.count(s1.a) || xsup.count(s2.a) || xsup.count(s2.b)) continue;
            if (ysup.count(s1.a) || ysup.count(s1.b) || ysup.count(s2.b)) continue;
            // (a1,b1)(a2,b2) = (a1,b2,a2)(a1,b2,b1)
            xs.push_back({s1.a, s2.b, s2.a});
            ys.insert(ys.begin(), {s1.a, s2.b, s1.b});
            ThreeFactorWitness w{target, perm_of(n, xs), perm_of(n, ys)};
            w.verify();
            return w;
        }
    throw error("no valid splice orientation found");
}

ThreeFactorWitness w3_witness(const Permutation& h) {
    if (!h.is_even()) throw error("w3_witness needs an even permutation");
    const int n = h.degree();
    Permutation x = Permutation::identity(n);
    Permutation y = Permutation::identity(n);

    std::vector<std::vector<int>> evens;
    for (const auto& c : h.cycles()) {
        const int l = static_cast<int>(c.size());
        if (l == 3) {
            x = compose(x, Permutation::from_cycles(n, {c}));
        } else if (l % 2 == 1) {
            const long long m = (l - 1) / 2;
            x = compose(x, perm_of(n, x_part(c, m)));
            y = compose(y, perm_of(n, y_part(c, m)));
        } else {
            evens.push_back(c);
        }
    }
    // an even permutation has an even number of even cycles; pair them off
    // longest first
    std::stable_sort(evens.begin(), evens.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    if (evens.size() % 2 != 0) throw error("even permutation with an odd number of even cycles");
    for (std::size_t i = 0; i + 1 < evens.size(); i += 2) {
        const auto w = even_pair_factors(n, evens[i], evens[i + 1]);
        x = compose(x, w.x);
        y = compose(y, w.y);
    }

    ThreeFactorWitness w{h, x, y};
    w.verify();
    return w;
}

bool dvir_cubes(const std::vector<int>& cycle_type, int n) {
    long long moved = 0, r = 0;
    for (int l : cycle_type) {
        if (l < 2) throw error("cycle type entries must be at least 2");
        moved += l;
        r += l - 1;
    }
    if (moved > n) throw error("cycle type does not fit the degree");
    if (r % 2 != 0) throw error("cycle type is odd");
    for (int l : cycle_type)
        for (long long t = 4; t <= l; t *= 2)
            if (l == t) return false;
    // a product of two fixed-point-free involutions has paired cycle type,
    // so the square (and hence the cube) of such a class stays far from the
    // full group
    if (moved == n && std::all_of(cycle_type.begin(), cycle_type.end(),
                                  [](int l) { return l == 2; }))
        return false;
    return 2 * r >= n - 1;
}

bool cor25_bound(long long p, long long k, long long n) {
    if (p < 3 || k < 1) throw error("cor25_bound needs p >= 3 and k >= 1");
    if (n < k * p) throw error("cycle type (p^k) does not fit the degree");
    return n < (k + 1) * p;
}

std::vector<long long> bertram_gap(long long p) {
    if (p < 3) throw error("bertram_gap needs an odd prime");
    std::vector<long long> out;
    for (long long n = (4 * p + 3) / 3 + 1; n < 2 * p; ++n)
        if (3 * n > 4 * p + 3) out.push_back(n);
    return out;
}

std::pair<bool, bool> ls_conditions(const Permutation& g, const Rational& epsilon) {
    if (epsilon <= 0 || epsilon >= Rational(1, 4)) throw error("epsilon must lie in (0, 1/4)");
    const long long n = g.degree();
    const auto st = g.stats();

    // (1)  c* + fix < (1/4 - eps) n, as an exact rational comparison
    const bool cond1 =
        Rational(st.nontrivial_cycles + st.fixed_points) < (Rational(1, 4) - epsilon) * n;

    // (2)  fix(g^2) < n^(1/4 - eps): with eps = a/b this is
    //      fix(g^2)^(4b) < n^(b - 4a), compared over the integers
    const long long f = g.power(2).stats().fixed_points;
    const Int a = boost::multiprecision::numerator(epsilon);
    const Int b = boost::multiprecision::denominator(epsilon);
    const auto ipow = [](Int base, Int e) {
        Int r = 1;
        while (e > 0) {
            if (e % 2 == 1) r *= base;
            base *= base;
            e /= 2;
        }
        return r;
    };
    const bool cond2 = ipow(Int(f), 4 * b) < ipow(Int(n), b - 4 * a);
    return {cond1, cond2};
}

AsymptoticThresholds thresholds(long long p) {
    auto prime = [](long long q) {
        if (q < 2) return false;
        for (long long d = 2; d * d <= q; ++d)
            if (q % d == 0) return false;
        return true;
    };
    if (!prime(p) || p < 3) throw error("thresholds needs an odd prime");
    AsymptoticThresholds t;
    t.p = p;
    if (p == 3) {
        t.constructive_case = true;
        return t;
    }
    t.epsilon = Rational(1, p * p);
    t.N1 = Rational(4 * p * p * p - 4 * p * p, p * p - 4 * p - 4);

    // least n with (p-1)^(4p^2) < n^(p^2-4), by binary search on the
    // monotone right-hand side
    const auto ipow = [](Int base, long long e) {
        Int r = 1;
        while (e > 0) {
            if (e % 2 == 1) r *= base;
            base *= base;
            e /= 2;
        }
        return r;
    };
    const Int lhs = ipow(Int(p - 1), 4 * p * p);
    Int lo = 1, hi = 2;
    while (!(lhs < ipow(hi, p * p - 4))) hi *= 2;
    while (lo + 1 < hi) {
        const Int mid = (lo + hi) / 2;
        if (lhs < ipow(mid, p * p - 4)) hi = mid;
        else lo = mid;
    }
    t.N2 = hi;
    return t;
}

} // namespace pw
