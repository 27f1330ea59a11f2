#include "pwidth/width.hpp"

#include <algorithm>
#include <functional>

namespace pw {

namespace {

constexpr int kWidthCap = 6;

struct LayerAnalysis {
    std::vector<int> min_k;                            // per class; identity 0
    std::vector<std::vector<char>> in_layer;           // in_layer[k][class]
    std::vector<std::pair<std::size_t, std::size_t>> first_pred; // (prev class, layer-1 class)
    int depth = 0; // layers computed; every class seen by this k
};

// layered closure of the class products generated by the layer-1 classes
LayerAnalysis analyze(std::size_t k_count, std::size_t identity_class,
                      const std::vector<std::size_t>& layer1,
                      const std::function<const std::vector<std::size_t>&(std::size_t, std::size_t)>& support) {
    LayerAnalysis la;
    la.min_k.assign(k_count, -1);
    la.first_pred.assign(k_count, {k_count, k_count});
    la.in_layer.assign(1, std::vector<char>(k_count, 0)); // index 0 unused
    la.min_k[identity_class] = 0;

    std::vector<char> cur(k_count, 0);
    for (std::size_t c : layer1) {
        cur[c] = 1;
        if (la.min_k[c] < 0) la.min_k[c] = 1;
    }
    la.in_layer.push_back(cur);
    la.depth = 1;

    auto all_seen = [&] {
        for (std::size_t c = 0; c < k_count; ++c)
            if (la.min_k[c] < 0) return false;
        return true;
    };

    for (int k = 2; !all_seen() || k <= 2; ++k) {
        if (k > kWidthCap)
            throw error("class-product layers did not cover the group within depth " +
                        std::to_string(kWidthCap));
        std::vector<char> next(k_count, 0);
        for (std::size_t a = 0; a < k_count; ++a) {
            if (!cur[a]) continue;
            for (std::size_t b : layer1)
                for (std::size_t d : support(a, b)) {
                    next[d] = 1;
                    if (la.min_k[d] < 0 && d != identity_class) {
                        la.min_k[d] = k;
                        la.first_pred[d] = {a, b};
                    }
                }
        }
        la.in_layer.push_back(next);
        la.depth = k;
        cur = std::move(next);
        if (all_seen() && k >= 2) break;
    }
    return la;
}

std::vector<std::size_t> layer1_classes(const std::vector<std::size_t>& order_p,
                                        std::optional<std::size_t> restrict_to) {
    if (restrict_to) {
        if (std::find(order_p.begin(), order_p.end(), *restrict_to) == order_p.end())
            throw error("restricted class does not consist of order-p elements");
        return {*restrict_to};
    }
    return order_p;
}

// walk first_pred back to layer 1, yielding the witness tuple for a class
std::vector<std::size_t> witness_tuple(const LayerAnalysis& la, std::size_t target) {
    std::vector<std::size_t> tuple;
    std::size_t c = target;
    for (int k = la.min_k[target]; k > 1; --k) {
        tuple.push_back(la.first_pred[c].second);
        c = la.first_pred[c].first;
    }
    tuple.push_back(c);
    std::reverse(tuple.begin(), tuple.end());
    return tuple;
}

} // namespace

WidthCertificate p_width_table(const CharTable& t, long long p,
                               std::optional<std::size_t> restrict_to) {
    const auto order_p = t.order_p_classes(p);
    if (order_p.empty()) throw error("the group has no elements of order " + std::to_string(p));
    const auto layer1 = layer1_classes(order_p, restrict_to);

    SupportCache cache(t);
    const auto la = analyze(
        t.count(), t.identity_class(), layer1,
        [&cache](std::size_t a, std::size_t b) -> const std::vector<std::size_t>& {
            return cache.support(a, b);
        });

    WidthCertificate cert;
    cert.group = t.group_name;
    cert.p = p;
    cert.single_class = restrict_to.has_value();
    for (std::size_t c : layer1) cert.generating_classes.push_back(t.classes[c].name);
    for (std::size_t c = 0; c < t.count(); ++c) {
        cert.per_class.push_back(
            {c, t.classes[c].name, t.classes[c].element_order, la.min_k[c]});
        cert.width = std::max(cert.width, la.min_k[c]);
    }

    for (std::size_t c = 0; c < t.count(); ++c) {
        if (la.in_layer[2][c] || c == t.identity_class()) continue;
        cert.outside_square.push_back(t.classes[c].name);
        for (std::size_t a : layer1)
            for (std::size_t b : layer1) {
                const auto sc = kappa(t, {a, b}, c);
                if (sc.value != 0) throw error("support and kappa evidence disagree");
                cert.evidence.push_back(
                    {{t.classes[a].name, t.classes[b].name}, t.classes[c].name, sc.value, {}});
            }
    }
    for (std::size_t c = 0; c < t.count(); ++c) {
        if (la.min_k[c] != cert.width || cert.width == 0) continue;
        const auto tuple = witness_tuple(la, c);
        const auto sc = kappa(t, tuple, c);
        if (sc.value == 0) throw error("witness tuple has zero kappa");
        KappaEvidence ev;
        for (std::size_t x : tuple) ev.tuple.push_back(t.classes[x].name);
        ev.target = t.classes[c].name;
        ev.value = sc.value;
        cert.evidence.push_back(std::move(ev));
    }
    return cert;
}

namespace {

struct OracleCache {
    const FiniteGroup* G;
    const ClassData* cd;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> cache;
    const std::vector<std::size_t>& support(std::size_t a, std::size_t b) {
        auto it = cache.find({a, b});
        if (it == cache.end())
            it = cache.emplace(std::make_pair(a, b), support_oracle(*G, *cd, a, b)).first;
        return it->second;
    }
};

WidthCertificate p_width_counting(const FiniteGroup& G, const ClassData& cd, long long p,
                                  const std::string& group_name,
                                  std::optional<std::size_t> restrict_to) {
    const auto raw = cd.order_p_classes(p);
    const std::vector<std::size_t> order_p(raw.begin(), raw.end());
    if (order_p.empty()) throw error("the group has no elements of order " + std::to_string(p));
    const auto layer1 = layer1_classes(order_p, restrict_to);

    OracleCache cache{&G, &cd, {}};
    const auto la = analyze(
        cd.count(), cd.identity_class(), layer1,
        [&cache](std::size_t a, std::size_t b) -> const std::vector<std::size_t>& {
            return cache.support(a, b);
        });

    WidthCertificate cert;
    cert.group = group_name;
    cert.p = p;
    cert.single_class = restrict_to.has_value();
    for (std::size_t c : layer1) cert.generating_classes.push_back(cd.cls(c).name);
    for (std::size_t c = 0; c < cd.count(); ++c) {
        cert.per_class.push_back({c, cd.cls(c).name, cd.cls(c).element_order, la.min_k[c]});
        cert.width = std::max(cert.width, la.min_k[c]);
    }
    for (std::size_t c = 0; c < cd.count(); ++c) {
        if (la.in_layer[2][c] || c == cd.identity_class()) continue;
        cert.outside_square.push_back(cd.cls(c).name);
        for (std::size_t a : layer1)
            for (std::size_t b : layer1) {
                const auto n = count_oracle(G, cd, a, b, c);
                if (n != 0) throw error("support and oracle evidence disagree");
                cert.evidence.push_back({{cd.cls(a).name, cd.cls(b).name}, cd.cls(c).name,
                                         Rational(0), n});
            }
    }
    for (std::size_t c = 0; c < cd.count(); ++c) {
        if (la.min_k[c] != cert.width || cert.width < 2) continue;
        // back the final step of the witness chain with a nonzero pair count
        const auto [a, b] = la.first_pred[c];
        const auto n = count_oracle(G, cd, a, b, c);
        if (n == 0) throw error("witness chain has zero oracle count");
        cert.evidence.push_back({{cd.cls(a).name, cd.cls(b).name}, cd.cls(c).name,
                                 Rational(0), n});
    }
    return cert;
}

} // namespace

WidthCertificate p_width(const FiniteGroup& G, const ClassData& cd, long long p,
                         WidthMethod method, const std::string& group_name,
                         std::optional<std::size_t> restrict_to) {
    if (method == WidthMethod::counting) return p_width_counting(G, cd, p, group_name, restrict_to);
    const CharTable t = dixon_table(G, cd, group_name);
    WidthCertificate cert = p_width_table(t, p, restrict_to);
    cert.group = group_name;
    if (method == WidthMethod::both) {
        const WidthCertificate check = p_width_counting(G, cd, p, group_name, restrict_to);
        if (check.width != cert.width) throw error("width methods disagree");
        for (std::size_t c = 0; c < cert.per_class.size(); ++c)
            if (cert.per_class[c].min_k != check.per_class[c].min_k)
                throw error("per-class width methods disagree");
    }
    return cert;
}

std::vector<std::string> table1_report(const CharTable& t, long long p) {
    const auto order_p = t.order_p_classes(p);
    if (order_p.empty()) throw error("the group has no elements of order " + std::to_string(p));
    std::vector<char> in_square(t.count(), 0);
    SupportCache cache(t);
    for (std::size_t a : order_p)
        for (std::size_t b : order_p)
            for (std::size_t d : cache.support(a, b)) in_square[d] = 1;
    std::vector<std::string> out;
    for (std::size_t c = 0; c < t.count(); ++c)
        if (!in_square[c] && c != t.identity_class()) out.push_back(t.classes[c].name);
    return out;
}

ElementWidth width_of_element(const FiniteGroup& G, const ClassData& cd, long long p,
                              std::uint32_t g) {
    if (g == G.identity_index()) return {0, {}};
    const auto raw = cd.order_p_classes(p);
    const std::vector<std::size_t> order_p(raw.begin(), raw.end());
    if (order_p.empty()) throw error("the group has no elements of order " + std::to_string(p));

    OracleCache cache{&G, &cd, {}};
    const auto la = analyze(
        cd.count(), cd.identity_class(), order_p,
        [&cache](std::size_t a, std::size_t b) -> const std::vector<std::size_t>& {
            return cache.support(a, b);
        });

    std::vector<std::uint32_t> ip_elements;
    for (std::size_t c : order_p)
        for (const std::uint32_t x : cd.cls(c).members) ip_elements.push_back(x);
    auto in_exact_layer = [&](std::uint32_t h, int k) {
        if (k == 0) return h == G.identity_index();
        return la.in_layer[static_cast<std::size_t>(k)][cd.class_of(h)] != 0;
    };

    ElementWidth result;
    result.k = la.min_k[cd.class_of(g)];
    std::uint32_t rest = g;
    for (int k = result.k; k > 1; --k) {
        bool found = false;
        for (const std::uint32_t x : ip_elements) {
            const std::uint32_t next = G.mul(G.inv(x), rest);
            if (in_exact_layer(next, k - 1)) {
                result.factors.push_back(x);
                rest = next;
                found = true;
                break;
            }
        }
        if (!found) throw error("failed to peel an order-p factor");
    }
    result.factors.push_back(rest);

    // verify the witness end to end
    std::uint32_t prod = G.identity_index();
    for (const std::uint32_t x : result.factors) {
        if (G.element_order(x) != p) throw error("witness factor has wrong order");
        prod = G.mul(prod, x);
    }
    if (prod != g) throw error("witness factors do not multiply back");
    return result;
}

} // namespace pw
