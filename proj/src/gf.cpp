#include "pwidth/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace pw {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Dense polynomial arithmetic over F_p on int coefficient vectors
// (constant term first), used only during field construction.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    // m is monic
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int da = static_cast<int>(a.size()) - 1;
        const int c = a.back();
        if (c != 0) {
            for (int i = 0; i <= dm; ++i) {
                int& t = a[static_cast<std::size_t>(da - dm + i)];
                t = ((t - c * m[static_cast<std::size_t>(i)]) % p + p) % p;
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return c;
}

std::vector<int> decode(int x, int p, int len) {
    std::vector<int> c(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) { c[static_cast<std::size_t>(i)] = x % p; x /= p; }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

int encode(const std::vector<int>& c, int p) {
    int x = 0;
    for (std::size_t i = c.size(); i-- > 0;) x = x * p + c[i];
    return x;
}

bool is_irreducible(const std::vector<int>& f, int p) {
    // trial division by all monic polynomials of degree 1..deg/2
    const int df = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= df; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int t = 0; t < count; ++t) {
            std::vector<int> g = decode(t, p, d);
            g.resize(static_cast<std::size_t>(d) + 1, 0);
            g[static_cast<std::size_t>(d)] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

FiniteField::FiniteField(int p, int k) : p_(p), k_(k) {
    if (!is_prime(p)) throw error("field characteristic must be prime");
    if (k < 1) throw error("field degree must be positive");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > 256) throw error("field too large (tables are dense; q <= 256)");
    }
    q_ = static_cast<int>(q);

    // lexicographically smallest monic irreducible of degree k
    // (compared as the tuple of coefficients from x^{k-1} down to x^0)
    mod_.clear();
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int t = 0; t < count && mod_.empty(); ++t) {
        // t's least significant base-p digit is the constant coefficient, so
        // ascending t compares high-degree coefficients first.
        std::vector<int> f(static_cast<std::size_t>(k) + 1, 0);
        int x = t;
        for (int i = 0; i < k; ++i) { f[static_cast<std::size_t>(i)] = x % p; x /= p; }
        f[static_cast<std::size_t>(k)] = 1;
        if (is_irreducible(f, p)) mod_ = f;
    }
    if (mod_.empty()) throw error("no irreducible polynomial found");

    const std::size_t qq = static_cast<std::size_t>(q_);
    add_.resize(qq * qq);
    mul_.resize(qq * qq);
    neg_.resize(qq);
    inv_.assign(qq, -1);
    for (int a = 0; a < q_; ++a) {
        const auto pa = decode(a, p, k);
        {
            std::vector<int> nc = pa;
            for (int& c : nc) c = (p - c) % p;
            neg_[static_cast<std::size_t>(a)] = encode(nc, p);
        }
        for (int b = 0; b < q_; ++b) {
            const auto pb = decode(b, p, k);
            std::vector<int> s(std::max(pa.size(), pb.size()), 0);
            for (std::size_t i = 0; i < s.size(); ++i) {
                int v = 0;
                if (i < pa.size()) v += pa[i];
                if (i < pb.size()) v += pb[i];
                s[i] = v % p;
            }
            add_[idx(a, b)] = encode(s, p);
            mul_[idx(a, b)] = encode(poly_mod(poly_mul(pa, pb, p), mod_, p), p);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[idx(a, b)] == 1) inv_[static_cast<std::size_t>(a)] = b;

    prim_ = 0;
    for (int a = 1; a < q_ && prim_ == 0; ++a) {
        int x = a, ord = 1;
        while (x != 1) { x = mul(x, a); ++ord; }
        if (ord == q_ - 1) prim_ = a;
    }
}

int FiniteField::inv(int a) const {
    if (a == 0) throw error("division by zero in finite field");
    return inv_[static_cast<std::size_t>(a)];
}

int FiniteField::pow(int a, long long e) const {
    if (a == 0) {
        if (e <= 0) throw error("0 cannot be raised to a nonpositive power");
        return 0;
    }
    e %= (q_ - 1);
    if (e < 0) e += q_ - 1;
    int acc = 1, base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

const FiniteField& FiniteField::get(int characteristic, int degree) {
    static std::map<std::pair<int, int>, std::unique_ptr<FiniteField>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(characteristic, degree);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<FiniteField>(new FiniteField(characteristic, degree))).first;
    return *it->second;
}

} // namespace pw
