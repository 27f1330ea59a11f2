#include "pwidth/matgrp.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef PWIDTH_DATA_DIR
#define PWIDTH_DATA_DIR ""
#endif

namespace pw {

namespace {

struct PrimePower {
    int l;
    int k;
};

PrimePower factor_prime_power(int q) {
    if (q < 2) throw error("field size must be at least 2");
    int l = 2;
    while (q % l != 0) {
        ++l;
        if (l * l > q) { l = q; break; }
    }
    int k = 0;
    int t = q;
    while (t % l == 0) { t /= l; ++k; }
    if (t != 1) throw error("field size " + std::to_string(q) + " is not a prime power");
    return {l, k};
}

Matrix elementary(const FiniteField& F, int n, int i, int j, int v) {
    Matrix m = Matrix::identity(F, n);
    m.set(i, j, v);
    return m;
}

// n-cycle monomial matrix with the corner entry signed to land in SL.
Matrix cycle_matrix(const FiniteField& F, int n) {
    Matrix c(F, n);
    for (int i = 0; i + 1 < n; ++i) c.set(i + 1, i, 1);
    c.set(0, n - 1, (n % 2 == 0) ? F.neg(1) : 1);
    return c;
}

std::vector<std::string> sl_generators(const FiniteField& F, int n) {
    std::vector<std::string> gens;
    const int z = F.primitive_element();
    int v = 1;
    for (int j = 0; j < F.degree(); ++j) {
        gens.push_back(elementary(F, n, 0, 1, v).key());
        gens.push_back(elementary(F, n, 1, 0, v).key());
        v = F.mul(v, z);
    }
    if (n >= 2) gens.push_back(cycle_matrix(F, n).key());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

// Symplectic transvection x -> x + lambda * B(x, v) * v for the form J.
Matrix symplectic_transvection(const FiniteField& F, const Matrix& J, const std::vector<int>& v, int lambda) {
    const int n = J.dim();
    Matrix m = Matrix::identity(F, n);
    // column j of the result: e_j + lambda * B(e_j, v) * v
    for (int j = 0; j < n; ++j) {
        int bjv = 0;
        for (int t = 0; t < n; ++t) bjv = F.add(bjv, F.mul(J.at(j, t), v[static_cast<std::size_t>(t)]));
        const int coeff = F.mul(lambda, bjv);
        if (coeff == 0) continue;
        for (int i = 0; i < n; ++i)
            m.set(i, j, F.add(m.at(i, j), F.mul(coeff, v[static_cast<std::size_t>(i)])));
    }
    return m;
}

std::vector<std::string> sp_generators(const FiniteField& F, int n) {
    const Matrix J = symplectic_form(F, n);
    std::vector<std::string> gens;
    const int q = F.size();
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= q;
        if (total > 1'000'000) throw error("symplectic generator set too large for this dimension");
    }
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    const int z = F.primitive_element();
    for (long long code = 1; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < n; ++i) { v[static_cast<std::size_t>(i)] = static_cast<int>(c % q); c /= q; }
        int lambda = 1;
        for (int j = 0; j < F.degree(); ++j) {
            gens.push_back(symplectic_transvection(F, J, v, lambda).key());
            lambda = F.mul(lambda, z);
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

// Solves b + b^q = t in F_{q^2} by scanning; the trace is onto F_q.
int solve_trace(const FiniteField& Fq2, int q, int t) {
    for (int b = 0; b < Fq2.size(); ++b)
        if (Fq2.add(b, Fq2.pow(b, q)) == t) return b;
    throw error("trace equation has no solution");
}

Matrix su3_unipotent(const FiniteField& Fq2, int q, int a, int b) {
    Matrix m = Matrix::identity(Fq2, 3);
    m.set(0, 1, a);
    m.set(0, 2, b);
    m.set(1, 2, Fq2.neg(Fq2.pow(a, q)));
    return m;
}

std::vector<std::string> su3_generators(const FiniteField& Fq2, int q, bool gu) {
    std::vector<std::string> gens;
    // u(a, b) needs b + b^q = -a^{q+1}
    {
        const int a = 1;
        const int b = solve_trace(Fq2, q, Fq2.neg(Fq2.pow(a, q + 1)));
        gens.push_back(su3_unipotent(Fq2, q, a, b).key());
    }
    {
        // a = 0: any b with trace zero, nonzero
        int b0 = -1;
        for (int b = 1; b < Fq2.size(); ++b)
            if (Fq2.add(b, Fq2.pow(b, q)) == 0) { b0 = b; break; }
        if (b0 > 0) gens.push_back(su3_unipotent(Fq2, q, 0, b0).key());
    }
    const int z = Fq2.primitive_element();
    {
        Matrix d(Fq2, 3);
        d.set(0, 0, z);
        d.set(1, 1, Fq2.pow(z, q - 1));
        d.set(2, 2, Fq2.pow(z, -static_cast<long long>(q)));
        gens.push_back(d.key());
    }
    {
        Matrix w(Fq2, 3);
        w.set(0, 2, 1);
        w.set(1, 1, Fq2.neg(1));
        w.set(2, 0, 1);
        gens.push_back(w.key());
    }
    if (gu) {
        Matrix d(Fq2, 3);
        d.set(0, 0, z);
        d.set(1, 1, 1);
        d.set(2, 2, Fq2.pow(z, -static_cast<long long>(q)));
        gens.push_back(d.key());
    }
    return gens;
}

std::vector<std::string> alternating_generators(int n) {
    std::vector<std::string> gens;
    if (n >= 3) {
        gens.push_back(PermOps::key_of(Permutation::from_cycles(n, {{1, 2, 3}})));
        std::vector<int> big;
        if (n % 2 == 1)
            for (int i = 1; i <= n; ++i) big.push_back(i);
        else
            for (int i = 2; i <= n; ++i) big.push_back(i);
        if (big.size() >= 2) gens.push_back(PermOps::key_of(Permutation::from_cycles(n, {big})));
    }
    return gens;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

Matrix hermitian_form_su3(const FiniteField& Fq2) {
    Matrix j(Fq2, 3);
    j.set(0, 2, 1);
    j.set(1, 1, 1);
    j.set(2, 0, 1);
    return j;
}

Matrix symplectic_form(const FiniteField& F, int n) {
    if (n % 2 != 0) throw error("symplectic form needs even dimension");
    Matrix j(F, n);
    for (int i = 0; i < n / 2; ++i) j.set(i, n - 1 - i, 1);
    for (int i = n / 2; i < n; ++i) j.set(i, n - 1 - i, F.neg(1));
    return j;
}

bool preserves_hermitian_form(const Matrix& g, const Matrix& J, int q) {
    const FiniteField& F = g.field();
    int s = 0;
    { // conj = x -> x^q; q = p^s
        int t = q;
        while (t > 1) { t /= F.characteristic(); ++s; }
    }
    const Matrix gs = g.frobenius(s).transpose();
    return gs.mul(J).mul(g) == J;
}

bool preserves_bilinear_form(const Matrix& g, const Matrix& J) {
    return g.transpose().mul(J).mul(g) == J;
}

BigInt order_sl(int n, int q) {
    BigInt o = 1;
    BigInt qp = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) o *= q;
    for (int i = 2; i <= n; ++i) {
        qp = 1;
        for (int t = 0; t < i; ++t) qp *= q;
        o *= qp - 1;
    }
    return o;
}

BigInt order_sp(int n, int q) {
    if (n % 2 != 0) throw error("Sp needs even dimension");
    const int m = n / 2;
    BigInt o = 1;
    for (int i = 0; i < m * m; ++i) o *= q;
    for (int i = 1; i <= m; ++i) {
        BigInt qp = 1;
        for (int t = 0; t < 2 * i; ++t) qp *= q;
        o *= qp - 1;
    }
    return o;
}

BigInt order_su3(int q) {
    BigInt Q = q;
    return Q * Q * Q * (Q * Q - 1) * (Q * Q * Q + 1);
}

BigInt order_gu3(int q) { return order_su3(q) * (q + 1); }

GroupSpec GroupSpec::parse(const std::string& text) {
    GroupSpec s;
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw error("empty group spec");
    std::string fam = parts[0];
    std::transform(fam.begin(), fam.end(), fam.begin(), [](unsigned char c) { return std::tolower(c); });
    auto need = [&](std::size_t n) {
        if (parts.size() != n) throw error("group spec '" + text + "' has wrong arity");
    };
    auto num = [&](std::size_t i) {
        const int v = std::atoi(parts[i].c_str());
        if (v <= 0) throw error("bad numeric field in group spec '" + text + "'");
        return v;
    };
    if (fam == "sl") { need(3); s.family = Family::SL; s.n = num(1); s.q = num(2); }
    else if (fam == "sp") { need(3); s.family = Family::Sp; s.n = num(1); s.q = num(2); }
    else if (fam == "su") { need(3); s.family = Family::SU; s.n = num(1); s.q = num(2); }
    else if (fam == "gu") { need(3); s.family = Family::GU; s.n = num(1); s.q = num(2); }
    else if (fam == "psl") { need(3); s.family = Family::PSL; s.n = num(1); s.q = num(2); }
    else if (fam == "psu") { need(3); s.family = Family::PSU; s.n = num(1); s.q = num(2); }
    else if (fam == "an") { need(2); s.family = Family::Alternating; s.n = num(1); }
    else if (fam == "sn") { need(2); s.family = Family::Symmetric; s.n = num(1); }
    else if (fam == "file") { need(2); s.family = Family::File; s.path = parts[1]; }
    else if (fam == "m11" || fam == "m12" || fam == "sz8") {
        need(1);
        s.family = Family::File;
        s.path = find_data_file(fam + ".txt");
    } else {
        throw error("unknown group family '" + fam +
                    "'; available: sl sp su gu psl psu an sn file m11 m12 sz8");
    }
    if ((s.family == Family::SU || s.family == Family::GU || s.family == Family::PSU) && s.n != 3)
        throw error("unitary groups are implemented for n = 3 only");
    if (s.family == Family::Sp && s.n % 2 != 0) throw error("Sp requires even dimension");
    return s;
}

std::string GroupSpec::describe() const {
    switch (family) {
        case Family::SL: return "SL" + std::to_string(n) + "(" + std::to_string(q) + ")";
        case Family::Sp: return "Sp" + std::to_string(n) + "(" + std::to_string(q) + ")";
        case Family::SU: return "SU" + std::to_string(n) + "(" + std::to_string(q) + ")";
        case Family::GU: return "GU" + std::to_string(n) + "(" + std::to_string(q) + ")";
        case Family::PSL: return "PSL" + std::to_string(n) + "(" + std::to_string(q) + ")";
        case Family::PSU: return "PSU" + std::to_string(n) + "(" + std::to_string(q) + ")";
        case Family::Alternating: return "A" + std::to_string(n);
        case Family::Symmetric: return "S" + std::to_string(n);
        case Family::File: return std::filesystem::path(path).stem().string();
    }
    return "?";
}

GroupHandle build_group(const GroupSpec& spec, std::size_t bound) {
    GroupHandle h;
    h.name = spec.describe();
    switch (spec.family) {
        case Family::SL:
        case Family::PSL: {
            const auto pp = factor_prime_power(spec.q);
            const FiniteField& F = FiniteField::get(pp.l, pp.k);
            h.ops = std::make_shared<MatOps>(F, spec.n);
            h.generators = sl_generators(F, spec.n);
            h.expected_order = order_sl(spec.n, spec.q);
            break;
        }
        case Family::Sp: {
            const auto pp = factor_prime_power(spec.q);
            const FiniteField& F = FiniteField::get(pp.l, pp.k);
            h.ops = std::make_shared<MatOps>(F, spec.n);
            h.generators = sp_generators(F, spec.n);
            h.expected_order = order_sp(spec.n, spec.q);
            break;
        }
        case Family::SU:
        case Family::PSU: {
            const auto pp = factor_prime_power(spec.q);
            const FiniteField& Fq2 = FiniteField::get(pp.l, 2 * pp.k);
            h.ops = std::make_shared<MatOps>(Fq2, 3);
            h.generators = su3_generators(Fq2, spec.q, false);
            h.expected_order = order_su3(spec.q);
            break;
        }
        case Family::GU: {
            const auto pp = factor_prime_power(spec.q);
            const FiniteField& Fq2 = FiniteField::get(pp.l, 2 * pp.k);
            h.ops = std::make_shared<MatOps>(Fq2, 3);
            h.generators = su3_generators(Fq2, spec.q, true);
            h.expected_order = order_gu3(spec.q);
            break;
        }
        case Family::Alternating: {
            h.ops = std::make_shared<PermOps>(std::max(spec.n, 1));
            h.generators = alternating_generators(spec.n);
            h.expected_order = spec.n >= 2 ? factorial(spec.n) / 2 : BigInt(1);
            break;
        }
        case Family::Symmetric: {
            h.ops = std::make_shared<PermOps>(std::max(spec.n, 1));
            if (spec.n >= 2) {
                h.generators.push_back(PermOps::key_of(Permutation::from_cycles(spec.n, {{1, 2}})));
                std::vector<int> big;
                for (int i = 1; i <= spec.n; ++i) big.push_back(i);
                h.generators.push_back(PermOps::key_of(Permutation::from_cycles(spec.n, {big})));
            }
            h.expected_order = factorial(spec.n);
            break;
        }
        case Family::File: {
            const auto gens = load_generator_file(spec.path);
            if (gens.empty()) throw error("generator file has no permutations: " + spec.path);
            h.ops = std::make_shared<PermOps>(gens[0].degree());
            for (const auto& g : gens) h.generators.push_back(PermOps::key_of(g));
            break;
        }
    }
    if (h.expected_order && *h.expected_order > BigInt(static_cast<unsigned long long>(bound))) {
        std::ostringstream os;
        os << h.name << " has order " << *h.expected_order << ", over the enumeration bound " << bound;
        throw bound_exceeded(os.str(), 0);
    }
    return h;
}

FiniteGroup central_quotient(const FiniteGroup& G, std::size_t bound) {
    auto z = center_keys(G);
    auto qops = std::make_shared<QuotientOps>(G.ops_ptr(), z);
    std::vector<std::string> gens;
    for (const auto& g : G.generators()) gens.push_back(qops->canonical(g));
    FiniteGroup Q(qops, gens, bound);
    if (Q.size() * z.size() != G.size()) throw error("central quotient size mismatch");
    return Q;
}

FiniteGroup realize_group(const GroupSpec& spec, std::size_t bound) {
    GroupHandle h = build_group(spec, bound);
    FiniteGroup G(h.ops, h.generators, bound);
    if (h.expected_order && BigInt(static_cast<unsigned long long>(G.size())) != *h.expected_order)
        throw error(h.name + ": enumerated order " + std::to_string(G.size()) +
                    " does not match the classical formula");
    if (spec.family == Family::PSL || spec.family == Family::PSU) return central_quotient(G, bound);
    return G;
}

Matrix transvection(int n, int l) {
    if (n < 2) throw error("transvection needs dimension at least 2");
    const FiniteField& F = FiniteField::get(l, 1);
    return elementary(F, n, 0, 1, 1);
}

bool is_primitive_root(long long l, long long p) {
    if (!is_prime(p)) throw error("modulus must be prime");
    const long long r = ((l % p) + p) % p;
    if (r == 0) throw error("base is divisible by the modulus");
    long long x = 1;
    for (long long e = 1; e < p; ++e) {
        x = (x * r) % p;
        if (x == 1) return e == p - 1;
    }
    return false;
}

std::vector<ArtinWitness> artin_scan(long long l, long long p_max, std::size_t bound) {
    if (l < 2) throw error("base must be at least 2");
    for (long long r = 1; r * r <= l; ++r)
        if (r * r == l)
            throw error("base " + std::to_string(l) + " is a perfect square; never a primitive root for p > 2");
    std::vector<ArtinWitness> out;
    for (long long p = 3; p <= p_max; p += 2) {
        if (!is_prime(p) || l % p == 0) continue;
        if (!is_primitive_root(l, p)) continue;
        ArtinWitness w;
        w.p = p;
        w.sl.family = Family::SL;
        w.sl.n = static_cast<int>(p - 1);
        w.sl.q = static_cast<int>(l);
        w.sp.family = Family::Sp;
        w.sp.n = static_cast<int>(p - 1);
        w.sp.q = static_cast<int>(l);
        const BigInt b(static_cast<unsigned long long>(bound));
        w.sl_enumerable = order_sl(w.sl.n, w.sl.q) <= b;
        w.sp_enumerable = order_sp(w.sp.n, w.sp.q) <= b;
        out.push_back(w);
    }
    return out;
}

std::vector<Permutation> load_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open generator file: " + path);
    std::string word;
    int degree = 0;
    if (!(in >> word) || word != "degree" || !(in >> degree) || degree < 1)
        throw error("generator file must start with 'degree n': " + path);
    std::vector<Permutation> gens;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
        if (blank) continue;
        gens.push_back(Permutation::parse(degree, line));
    }
    return gens;
}

void save_generator_file(const std::string& path, int degree, const std::vector<Permutation>& gens) {
    std::ofstream out(path);
    if (!out) throw error("cannot write generator file: " + path);
    out << "degree " << degree << "\n";
    for (const auto& g : gens) out << g.to_cycle_string() << "\n";
}

std::string find_data_file(const std::string& name) {
    std::vector<std::filesystem::path> roots;
    if (const char* env = std::getenv("PWIDTH_DATA")) roots.emplace_back(env);
    roots.emplace_back("data/gens");
    roots.emplace_back("../data/gens");
    roots.emplace_back("../../data/gens");
    if (std::string(PWIDTH_DATA_DIR) != "") roots.emplace_back(PWIDTH_DATA_DIR);
    for (const auto& r : roots) {
        const auto p = r / name;
        if (std::filesystem::exists(p)) return p.string();
    }
    throw error("bundled data file not found: " + name + " (set PWIDTH_DATA)");
}

} // namespace pw
