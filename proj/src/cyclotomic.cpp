#include "pwidth/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace pw {

unsigned Cyclotomic::phi(unsigned e) {
    unsigned result = e;
    unsigned n = e;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// integer polynomial division a / b with b monic; returns quotient,
// replaces a by the remainder
std::vector<Int> poly_divmod(std::vector<Int>& a, const std::vector<Int>& b) {
    const int db = static_cast<int>(b.size()) - 1;
    std::vector<Int> q;
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int da = static_cast<int>(a.size()) - 1;
        const Int c = a.back();
        if (q.size() < static_cast<std::size_t>(da - db + 1)) q.resize(static_cast<std::size_t>(da - db + 1));
        q[static_cast<std::size_t>(da - db)] = c;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= c * b[static_cast<std::size_t>(i)];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (static_cast<int>(a.size()) - 1 == da) throw error("polynomial division failed");
    }
    return q;
}

// x^m mod Phi_e for m in [0, e), integer coefficients
using MonomialTable = std::vector<std::vector<Int>>;

const MonomialTable& monomial_table(unsigned e) {
    static std::map<unsigned, MonomialTable> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    const auto& Phi = Cyclotomic::cyclotomic_polynomial(e);
    const unsigned d = Cyclotomic::phi(e);
    MonomialTable tab(e);
    std::vector<Int> cur(1, Int(1));
    for (unsigned m = 0; m < e; ++m) {
        tab[m] = cur;
        tab[m].resize(d, Int(0));
        // multiply by x, reduce if the degree reaches d
        cur.insert(cur.begin(), Int(0));
        if (cur.size() == d + 1) {
            const Int c = cur.back();
            if (c != 0)
                for (unsigned i = 0; i <= d; ++i)
                    cur[i] -= c * Phi[i];
            cur.pop_back();
        }
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
        if (cur.empty()) cur.assign(1, Int(0));
    }
    return cache.emplace(e, std::move(tab)).first->second;
}

} // namespace

const std::vector<Int>& Cyclotomic::cyclotomic_polynomial(unsigned e) {
    static std::map<unsigned, std::vector<Int>> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d, computed without
    // recursive locking by ascending divisor order.
    std::vector<unsigned> todo;
    todo.push_back(e);
    for (unsigned d = 1; d < e; ++d)
        if (e % d == 0 && !cache.count(d)) todo.push_back(d);
    std::sort(todo.begin(), todo.end());
    for (unsigned n : todo) {
        if (cache.count(n)) continue;
        std::vector<Int> num(static_cast<std::size_t>(n) + 1, Int(0));
        num[0] = -1;
        num[static_cast<std::size_t>(n)] = 1;
        for (unsigned d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            std::vector<Int> q = poly_divmod(num, cache.at(d));
            if (!num.empty()) throw error("cyclotomic polynomial division left a remainder");
            num = std::move(q);
        }
        cache.emplace(n, num);
    }
    return cache.at(e);
}

Cyclotomic Cyclotomic::root_of_unity(unsigned e, long long k) {
    if (e == 0) throw error("conductor must be positive");
    long long kk = ((k % static_cast<long long>(e)) + e) % static_cast<long long>(e);
    const unsigned g = std::gcd(static_cast<unsigned>(kk), e);
    const unsigned e2 = e / g;
    kk /= g;
    Cyclotomic c;
    c.conductor_ = e2;
    c.coeffs_.assign(phi(e2), Rational(0));
    const auto& tab = monomial_table(e2);
    const auto& mono = tab[static_cast<std::size_t>(kk)];
    for (std::size_t i = 0; i < mono.size(); ++i) c.coeffs_[i] = Rational(mono[i]);
    c.normalize();
    return c;
}

Cyclotomic Cyclotomic::from_coefficients(unsigned e, std::vector<Rational> coeffs) {
    if (coeffs.size() != phi(e)) throw error("coefficient vector length must be phi(conductor)");
    Cyclotomic c;
    c.conductor_ = e;
    c.coeffs_ = std::move(coeffs);
    c.normalize();
    return c;
}

void Cyclotomic::normalize() {
    if (conductor_ == 1) return;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return;
    const Rational v = coeffs_[0];
    conductor_ = 1;
    coeffs_.assign(1, v);
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (conductor_ != 1) throw error("value is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted(unsigned L) const {
    if (L % conductor_ != 0) throw error("lift target must be a multiple of the conductor");
    if (L == conductor_) return *this;
    const unsigned step = L / conductor_;
    const auto& tab = monomial_table(L);
    Cyclotomic out;
    out.conductor_ = L;
    out.coeffs_.assign(phi(L), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const auto& mono = tab[(i * step) % L];
        for (std::size_t j = 0; j < mono.size(); ++j)
            if (mono[j] != 0) out.coeffs_[j] += coeffs_[i] * Rational(mono[j]);
    }
    // no normalize: callers rely on the result genuinely having conductor L
    return out;
}

Cyclotomic Cyclotomic::galois(long long t) const {
    const unsigned e = conductor_;
    long long tt = ((t % static_cast<long long>(e)) + e) % static_cast<long long>(e);
    if (std::gcd(static_cast<unsigned>(tt), e) != 1) throw error("galois exponent not coprime to conductor");
    if (e == 1 || tt == 1) return *this;
    const auto& tab = monomial_table(e);
    Cyclotomic out;
    out.conductor_ = e;
    out.coeffs_.assign(phi(e), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const auto& mono = tab[(i * static_cast<std::size_t>(tt)) % e];
        for (std::size_t j = 0; j < mono.size(); ++j)
            if (mono[j] != 0) out.coeffs_[j] += coeffs_[i] * Rational(mono[j]);
    }
    out.normalize();
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    const unsigned L = std::lcm(conductor_, rhs.conductor_);
    if (L != conductor_) *this = lifted(L);
    if (rhs.conductor_ == L) {
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    } else {
        const Cyclotomic r = rhs.lifted(L);
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
    }
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
    *this += -rhs;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    if (conductor_ == 1) {
        const Rational s = coeffs_[0];
        *this = rhs;
        return *this *= s;
    }
    if (rhs.conductor_ == 1) return *this *= rhs.coeffs_[0];
    const unsigned L = std::lcm(conductor_, rhs.conductor_);
    const Cyclotomic a = lifted(L);
    const Cyclotomic b = rhs.lifted(L);
    // convolution with exponents folded mod L (z^L = 1), then reduction
    std::vector<Rational> folded(L, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            folded[(i + j) % L] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    const auto& tab = monomial_table(L);
    const unsigned d = phi(L);
    Cyclotomic out;
    out.conductor_ = L;
    out.coeffs_.assign(d, Rational(0));
    for (unsigned m = 0; m < L; ++m) {
        if (folded[m] == 0) continue;
        if (m < d) {
            out.coeffs_[m] += folded[m];
        } else {
            const auto& mono = tab[m];
            for (std::size_t j = 0; j < mono.size(); ++j)
                if (mono[j] != 0) out.coeffs_[j] += folded[m] * Rational(mono[j]);
        }
    }
    out.normalize();
    *this = std::move(out);
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& s) {
    if (s == 0) throw error("division by zero");
    for (auto& c : coeffs_) c /= s;
    return *this;
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    if (conductor_ == rhs.conductor_) return coeffs_ == rhs.coeffs_;
    const unsigned L = std::lcm(conductor_, rhs.conductor_);
    return lifted(L).coeffs_ == rhs.lifted(L).coeffs_;
}

std::string Cyclotomic::to_string() const {
    if (conductor_ == 1) {
        std::ostringstream os;
        os << coeffs_[0];
        return os.str();
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        if (c < 0) c = -c;
        if (i == 0) { os << c; continue; }
        if (c != 1) os << c << "*";
        os << "z" << conductor_;
        if (i > 1) os << "^" << i;
    }
    if (first) return "0";
    return os.str();
}

} // namespace pw
