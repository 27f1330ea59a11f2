#include "pwidth/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace pw {

std::string PermOps::key_of(const Permutation& p) {
    std::string k(static_cast<std::size_t>(p.degree()), '\0');
    for (int i = 0; i < p.degree(); ++i) k[static_cast<std::size_t>(i)] = static_cast<char>(p.image0(i));
    return k;
}

Permutation PermOps::perm_of(const std::string& key) {
    std::vector<int> img(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) img[i] = static_cast<std::uint8_t>(key[i]);
    return Permutation(std::move(img));
}

std::string PermOps::identity() const { return key_of(Permutation::identity(degree_)); }

std::string PermOps::mul(const std::string& a, const std::string& b) const {
    std::string out(a.size(), '\0');
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = b[static_cast<std::size_t>(static_cast<std::uint8_t>(a[i]))];
    return out;
}

std::string PermOps::inv(const std::string& a) const {
    std::string out(a.size(), '\0');
    for (std::size_t i = 0; i < a.size(); ++i)
        out[static_cast<std::size_t>(static_cast<std::uint8_t>(a[i]))] = static_cast<char>(i);
    return out;
}

std::string PermOps::describe(const std::string& a) const { return perm_of(a).to_cycle_string(); }

std::string MatOps::identity() const { return Matrix::identity(*F_, n_).key(); }

std::string MatOps::mul(const std::string& a, const std::string& b) const {
    const FiniteField& F = *F_;
    const int n = n_;
    std::string out(a.size(), '\0');
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int acc = 0;
            for (int t = 0; t < n; ++t)
                acc = F.add(acc, F.mul(static_cast<std::uint8_t>(a[static_cast<std::size_t>(i * n + t)]),
                                       static_cast<std::uint8_t>(b[static_cast<std::size_t>(t * n + j)])));
            out[static_cast<std::size_t>(i * n + j)] = static_cast<char>(acc);
        }
    return out;
}

std::string MatOps::inv(const std::string& a) const {
    return Matrix::from_key(*F_, n_, a).inverse().key();
}

std::string MatOps::describe(const std::string& a) const {
    const Matrix m = Matrix::from_key(*F_, n_, a);
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
        if (i) s += "; ";
        for (int j = 0; j < n_; ++j) {
            if (j) s += " ";
            s += std::to_string(m.at(i, j));
        }
    }
    s += "]";
    return s;
}

std::string QuotientOps::canonical(const std::string& a) const {
    std::string best = a;
    for (const auto& z : center_) {
        std::string cand = base_->mul(z, a);
        if (cand < best) best = std::move(cand);
    }
    return best;
}

std::size_t default_enumeration_bound() {
    if (const char* s = std::getenv("PWIDTH_MAX_ORDER")) {
        const long long v = std::atoll(s);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 20'000'000;
}

FiniteGroup::FiniteGroup(std::shared_ptr<const ElementOps> ops, std::vector<std::string> generator_keys,
                         std::size_t bound)
    : ops_(std::move(ops)), gens_(std::move(generator_keys)) {
    const std::string id = ops_->identity();
    elements_.push_back(id);
    index_.emplace(id, 0);
    std::size_t head = 0;
    while (head < elements_.size()) {
        const std::string cur = elements_[head++];
        for (const auto& g : gens_) {
            std::string nxt = ops_->mul(cur, g);
            if (index_.emplace(nxt, static_cast<std::uint32_t>(elements_.size())).second) {
                if (elements_.size() >= bound)
                    throw bound_exceeded("group enumeration exceeded bound (partial count " +
                                             std::to_string(elements_.size() + 1) + ")",
                                         elements_.size() + 1);
                elements_.push_back(std::move(nxt));
            }
        }
    }
    id_index_ = 0;
    inv_.resize(elements_.size());
    for (std::uint32_t i = 0; i < elements_.size(); ++i)
        inv_[i] = index_.at(ops_->inv(elements_[i]));
}

std::uint32_t FiniteGroup::index_of(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw error("element not in group");
    return it->second;
}

std::uint32_t FiniteGroup::mul(std::uint32_t a, std::uint32_t b) const {
    return index_.at(ops_->mul(elements_[a], elements_[b]));
}

std::uint32_t FiniteGroup::inv(std::uint32_t a) const { return inv_[a]; }

long long FiniteGroup::element_order(std::uint32_t a) const {
    long long ord = 1;
    std::uint32_t x = a;
    while (x != id_index_) {
        x = mul(x, a);
        ++ord;
        if (static_cast<std::size_t>(ord) > size()) throw error("order computation overran group size");
    }
    return ord;
}

FiniteGroup enumerate_group(std::shared_ptr<const ElementOps> ops, std::vector<std::string> gens,
                            std::size_t bound) {
    return FiniteGroup(std::move(ops), std::move(gens), bound);
}

std::vector<std::string> center_keys(const FiniteGroup& G) {
    std::vector<std::string> out;
    for (std::uint32_t i = 0; i < G.size(); ++i) {
        bool central = true;
        for (const auto& g : G.generators()) {
            if (G.ops().mul(G.element(i), g) != G.ops().mul(g, G.element(i))) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(G.element(i));
    }
    return out;
}

namespace {

std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> ps;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace

ClassData::ClassData(const FiniteGroup& G) : G_(&G) {
    const std::uint32_t kUnset = 0xffffffffu;
    class_of_.assign(G.size(), kUnset);

    // Conjugacy classes are orbits under conjugation by the generators.
    std::vector<std::uint32_t> gen_idx, gen_inv_idx;
    for (const auto& g : G.generators()) {
        gen_idx.push_back(G.index_of(g));
        gen_inv_idx.push_back(G.index_of(G.ops().inv(g)));
    }
    for (std::uint32_t start = 0; start < G.size(); ++start) {
        if (class_of_[start] != kUnset) continue;
        const std::uint32_t cid = static_cast<std::uint32_t>(classes_.size());
        ConjugacyClass c;
        c.representative = start;
        class_of_[start] = cid;
        c.members.push_back(start);
        std::size_t head = 0;
        while (head < c.members.size()) {
            const std::uint32_t x = c.members[head++];
            for (std::size_t t = 0; t < gen_idx.size(); ++t) {
                const std::uint32_t y = G.mul(G.mul(gen_inv_idx[t], x), gen_idx[t]);
                if (class_of_[y] == kUnset) {
                    class_of_[y] = cid;
                    c.members.push_back(y);
                }
            }
        }
        c.size = c.members.size();
        c.element_order = G.element_order(start);
        classes_.push_back(std::move(c));
    }

    exponent_ = 1;
    for (const auto& c : classes_) exponent_ = std::lcm(exponent_, c.element_order);

    // ATLAS-style ordering: ascending element order, then descending size,
    // then ascending minimal member index (deterministic; letters for tied
    // classes are not guaranteed to match published tables).
    std::vector<std::uint32_t> order(classes_.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::uint32_t> min_member(classes_.size());
    for (std::size_t i = 0; i < classes_.size(); ++i)
        min_member[i] = *std::min_element(classes_[i].members.begin(), classes_[i].members.end());
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (classes_[a].element_order != classes_[b].element_order)
            return classes_[a].element_order < classes_[b].element_order;
        if (classes_[a].size != classes_[b].size) return classes_[a].size > classes_[b].size;
        return min_member[a] < min_member[b];
    });
    std::vector<ConjugacyClass> sorted;
    sorted.reserve(classes_.size());
    std::vector<std::uint32_t> new_id(classes_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        new_id[order[i]] = static_cast<std::uint32_t>(i);
        sorted.push_back(std::move(classes_[order[i]]));
    }
    classes_ = std::move(sorted);
    for (auto& c : class_of_) c = new_id[c];

    // names
    long long prev_order = -1;
    int letter = 0;
    for (auto& c : classes_) {
        if (c.element_order != prev_order) { prev_order = c.element_order; letter = 0; }
        std::string suffix;
        int v = letter++;
        do { suffix.insert(suffix.begin(), static_cast<char>('A' + v % 26)); v = v / 26 - 1; } while (v >= 0);
        c.name = std::to_string(c.element_order) + suffix;
    }

    // inverse and power maps
    for (auto& c : classes_) {
        const std::uint32_t rep = c.representative;
        c.inverse_class = class_of_[G.inv(rep)];
        c.power_classes.resize(static_cast<std::size_t>(c.element_order));
        std::uint32_t x = G.identity_index();
        for (long long s = 0; s < c.element_order; ++s) {
            c.power_classes[static_cast<std::size_t>(s)] = class_of_[x];
            x = G.mul(x, rep);
        }
        for (long long p : prime_divisors(exponent_)) {
            std::uint32_t xp = G.identity_index();
            // rep^p with p possibly >= element order
            long long e = p % c.element_order;
            c.prime_power[p] = c.power_classes[static_cast<std::size_t>(e)];
            (void)xp;
        }
    }
}

std::optional<std::uint32_t> ClassData::class_by_name(const std::string& name) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].name == name) return static_cast<std::uint32_t>(i);
    return std::nullopt;
}

std::vector<std::uint32_t> ClassData::order_p_classes(long long p) const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].element_order == p) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

} // namespace pw
