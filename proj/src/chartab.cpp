#include "pwidth/chartab.hpp"

#include <algorithm>
#include <random>

namespace pw {

namespace {

using u64 = std::uint64_t;

// ---- arithmetic modulo a word-sized prime (P < 2^31, so products fit) ----

u64 add_mod(u64 a, u64 b, u64 P) { return (a + b) % P; }
u64 sub_mod(u64 a, u64 b, u64 P) { return (a + P - b) % P; }
u64 mul_mod(u64 a, u64 b, u64 P) { return a * b % P; }

u64 pow_mod(u64 a, u64 e, u64 P) {
    u64 r = 1;
    a %= P;
    while (e) {
        if (e & 1) r = mul_mod(r, a, P);
        a = mul_mod(a, a, P);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 P) {
    if (a % P == 0) throw error("division by zero mod P");
    return pow_mod(a, P - 2, P);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

u64 primitive_root_mod(u64 P) {
    const auto fs = prime_factors(P - 1);
    for (u64 w = 2; w < P; ++w) {
        bool ok = true;
        for (u64 f : fs)
            if (pow_mod(w, (P - 1) / f, P) == 1) { ok = false; break; }
        if (ok) return w;
    }
    throw error("no primitive root found");
}

// Tonelli-Shanks square root mod P; throws when a is a non-residue.
u64 sqrt_mod(u64 a, u64 P) {
    a %= P;
    if (a == 0) return 0;
    if (pow_mod(a, (P - 1) / 2, P) != 1) throw error("not a quadratic residue mod P");
    if (P % 4 == 3) return pow_mod(a, (P + 1) / 4, P);
    u64 q = P - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    u64 z = 2;
    while (pow_mod(z, (P - 1) / 2, P) == 1) ++z;
    u64 m = s;
    u64 c = pow_mod(z, q, P);
    u64 t = pow_mod(a, q, P);
    u64 r = pow_mod(a, (q + 1) / 2, P);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) { tt = mul_mod(tt, tt, P); ++i; }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, P);
        m = i;
        c = mul_mod(b, b, P);
        t = mul_mod(t, c, P);
        r = mul_mod(r, b, P);
    }
    return r;
}

// ---- small dense linear algebra over Z/P ----

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

Vec mat_apply(const Mat& M, const Vec& v, u64 P) {
    const std::size_t n = M.size();
    Vec out(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        u64 acc = 0;
        const auto& row = M[j];
        for (std::size_t m = 0; m < n; ++m)
            if (v[m]) acc = add_mod(acc, mul_mod(row[m], v[m], P), P);
        out[j] = acc;
    }
    return out;
}

u64 determinant(Mat a, u64 P) {
    const std::size_t n = a.size();
    u64 det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) { std::swap(a[piv], a[col]); det = P - det; }
        det = mul_mod(det, a[col][col], P);
        const u64 ip = inv_mod(a[col][col], P);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const u64 f = mul_mod(a[r][col], ip, P);
            for (std::size_t c = col; c < n; ++c)
                a[r][c] = sub_mod(a[r][c], mul_mod(f, a[col][c], P), P);
        }
    }
    return det % P;
}

// Basis of the nullspace of a (rows may outnumber columns).
std::vector<Vec> nullspace(Mat a, u64 P) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        const u64 ip = inv_mod(a[rank][col], P);
        for (std::size_t c = 0; c < cols; ++c) a[rank][c] = mul_mod(a[rank][c], ip, P);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const u64 f = a[r][col];
            for (std::size_t c = 0; c < cols; ++c)
                a[r][c] = sub_mod(a[r][c], mul_mod(f, a[rank][c], P), P);
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] != -1) continue;
        Vec v(cols, 0);
        v[free_col] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] != -1)
                v[c] = sub_mod(0, a[static_cast<std::size_t>(pivot_of_col[c])][free_col], P);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Invariant subspace in reduced row-echelon basis with recorded pivots, so
// membership coordinates come from plain back-substitution.
struct Subspace {
    std::vector<Vec> basis;
    std::vector<std::size_t> pivots;

    std::size_t dim() const { return basis.size(); }

    static Subspace from_vectors(std::vector<Vec> vs, u64 P) {
        Subspace s;
        for (auto& v : vs) {
            for (std::size_t b = 0; b < s.basis.size(); ++b)
                if (v[s.pivots[b]]) {
                    const u64 f = v[s.pivots[b]];
                    for (std::size_t c = 0; c < v.size(); ++c)
                        v[c] = sub_mod(v[c], mul_mod(f, s.basis[b][c], P), P);
                }
            std::size_t piv = 0;
            while (piv < v.size() && v[piv] == 0) ++piv;
            if (piv == v.size()) continue;
            const u64 ip = inv_mod(v[piv], P);
            for (auto& c : v) c = mul_mod(c, ip, P);
            for (std::size_t b = 0; b < s.basis.size(); ++b)
                if (s.basis[b][piv]) {
                    const u64 f = s.basis[b][piv];
                    for (std::size_t c = 0; c < v.size(); ++c)
                        s.basis[b][c] = sub_mod(s.basis[b][c], mul_mod(f, v[c], P), P);
                }
            s.basis.push_back(std::move(v));
            s.pivots.push_back(piv);
        }
        // keep a canonical order: by pivot column
        std::vector<std::size_t> idx(s.basis.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return s.pivots[a] < s.pivots[b]; });
        Subspace out;
        for (std::size_t i : idx) {
            out.basis.push_back(std::move(s.basis[i]));
            out.pivots.push_back(s.pivots[i]);
        }
        return out;
    }

    // coordinates of v in this basis; throws when v is outside the subspace
    Vec coordinates(Vec v, u64 P) const {
        Vec coord(basis.size(), 0);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const u64 f = v[pivots[b]];
            if (!f) continue;
            coord[b] = f;
            for (std::size_t c = 0; c < v.size(); ++c)
                v[c] = sub_mod(v[c], mul_mod(f, basis[b][c], P), P);
        }
        for (u64 c : v)
            if (c) throw error("vector escaped an invariant subspace");
        return coord;
    }
};

// characteristic polynomial of a d x d matrix by interpolation at 0..d
Vec char_poly(const Mat& B, u64 P) {
    const std::size_t d = B.size();
    std::vector<u64> xs(d + 1), ys(d + 1);
    for (std::size_t t = 0; t <= d; ++t) {
        Mat M = B;
        for (std::size_t i = 0; i < d; ++i) M[i][i] = sub_mod(M[i][i], t, P);
        xs[t] = t;
        ys[t] = determinant(std::move(M), P);
    }
    // Lagrange interpolation to coefficient form
    Vec poly(d + 1, 0);
    for (std::size_t t = 0; t <= d; ++t) {
        Vec num(1, 1); // product of (x - xs[u]) for u != t
        u64 den = 1;
        for (std::size_t u = 0; u <= d; ++u) {
            if (u == t) continue;
            Vec next(num.size() + 1, 0);
            for (std::size_t c = 0; c < num.size(); ++c) {
                next[c + 1] = add_mod(next[c + 1], num[c], P);
                next[c] = sub_mod(next[c], mul_mod(num[c], xs[u], P), P);
            }
            num = std::move(next);
            den = mul_mod(den, sub_mod(xs[t], xs[u], P), P);
        }
        const u64 f = mul_mod(ys[t], inv_mod(den, P), P);
        for (std::size_t c = 0; c < num.size(); ++c)
            poly[c] = add_mod(poly[c], mul_mod(num[c], f, P), P);
    }
    return poly;
}

std::vector<u64> poly_roots(const Vec& poly, u64 P) {
    std::vector<u64> roots;
    for (u64 x = 0; x < P; ++x) {
        u64 acc = 0;
        for (std::size_t c = poly.size(); c-- > 0;)
            acc = add_mod(mul_mod(acc, x, P), poly[c], P);
        if (acc == 0) roots.push_back(x);
    }
    return roots;
}

bool cyclo_less(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
    return a.coefficients() < b.coefficients();
}

} // namespace

// ---- CharTable ----

std::size_t CharTable::identity_class() const {
    for (std::size_t j = 0; j < classes.size(); ++j)
        if (classes[j].size == 1 && classes[j].element_order == 1) return j;
    throw error("table has no identity class");
}

std::optional<std::size_t> CharTable::class_index(const std::string& name) const {
    for (std::size_t j = 0; j < classes.size(); ++j)
        if (classes[j].name == name) return j;
    return std::nullopt;
}

std::vector<std::size_t> CharTable::order_p_classes(long long p) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < classes.size(); ++j)
        if (classes[j].element_order == p) out.push_back(j);
    return out;
}

void CharTable::validate() const {
    const std::size_t k = classes.size();
    if (values.size() != k) throw error("character count differs from class count");
    for (const auto& row : values)
        if (row.size() != k) throw error("character row has wrong length");

    std::uint64_t total = 0;
    for (std::size_t j = 0; j < k; ++j) {
        const auto& c = classes[j];
        total += c.size;
        if (group_order % c.size != 0) throw error("class size does not divide the group order");
        if (c.inverse >= k || classes[c.inverse].inverse != j)
            throw error("inverse map is not an involution");
        if (exponent % c.element_order != 0)
            throw error("element order does not divide the exponent");
    }
    if (total != group_order) throw error("class equation violated");

    for (long long p : prime_factors(static_cast<u64>(exponent)))
        for (const auto& c : classes)
            if (!c.prime_power.count(p)) throw error("missing power map for a prime dividing the exponent");

    const std::size_t idc = identity_class();
    Rational degree_squares = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const Rational d = values[i][idc].rational_value();
        if (d <= 0 || boost::multiprecision::denominator(d) != 1)
            throw error("character degree is not a positive integer");
        if (Int(group_order) % boost::multiprecision::numerator(d) != 0)
            throw error("character degree does not divide the group order");
        degree_squares += d * d;
    }
    if (degree_squares != group_order) throw error("degree squares do not sum to the group order");

    // row orthogonality
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t i2 = i; i2 < k; ++i2) {
            Cyclotomic s;
            for (std::size_t j = 0; j < k; ++j)
                s += values[i][j] * values[i2][classes[j].inverse] * Rational(classes[j].size);
            const Cyclotomic want(i == i2 ? Rational(group_order) : Rational(0));
            if (!(s == want)) throw error("row orthogonality violated");
        }
    // column orthogonality
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t j2 = j; j2 < k; ++j2) {
            Cyclotomic s;
            for (std::size_t i = 0; i < k; ++i)
                s += values[i][j] * values[i][classes[j2].inverse];
            const Cyclotomic want(j == j2 ? Rational(centralizer_order(j)) : Rational(0));
            if (!(s == want)) throw error("column orthogonality violated");
        }
}

// ---- class matrices ----

ClassMatrix class_matrix(const FiniteGroup& G, const ClassData& cd, std::size_t i) {
    const std::size_t k = cd.count();
    ClassMatrix A(k, std::vector<std::uint64_t>(k, 0));
    std::vector<std::uint32_t> rep_index(k);
    for (std::size_t m = 0; m < k; ++m) rep_index[m] = cd.cls(m).representative;
    for (const std::uint32_t x : cd.cls(i).members) {
        const std::uint32_t xinv = G.inv(x);
        for (std::size_t m = 0; m < k; ++m) {
            const std::uint32_t y = G.mul(xinv, rep_index[m]);
            ++A[cd.class_of(y)][m];
        }
    }
    return A;
}

std::vector<ClassMatrix> class_matrices(const FiniteGroup& G, const ClassData& cd) {
    std::vector<ClassMatrix> out;
    out.reserve(cd.count());
    for (std::size_t i = 0; i < cd.count(); ++i) out.push_back(class_matrix(G, cd, i));
    return out;
}

// ---- the modular eigenvector method ----

namespace {

u64 choose_prime(std::uint64_t group_order, long long exponent) {
    // smallest P with P ≡ 1 mod e and P^2 > 4|G| (so lifted integers in
    // (-P/2, P/2) are unambiguous)
    const u64 e = static_cast<u64>(exponent);
    for (u64 P = e + 1;; P += e) {
        if (P * P > 4 * group_order && is_prime(P)) return P;
    }
}

} // namespace

CharTable dixon_table(const FiniteGroup& G, const ClassData& cd, const std::string& group_name) {
    const std::size_t k = cd.count();
    const u64 P = choose_prime(G.size(), cd.exponent());

    // class matrices reduced mod P
    std::vector<Mat> A(k);
    for (std::size_t i = 0; i < k; ++i) {
        const ClassMatrix M = class_matrix(G, cd, i);
        A[i].assign(k, Vec(k, 0));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t m = 0; m < k; ++m) A[i][j][m] = M[j][m] % P;
    }

    // split the full space into common eigenlines using seeded combinations
    std::vector<Subspace> spaces;
    {
        std::vector<Vec> full(k, Vec(k, 0));
        for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
        spaces.push_back(Subspace::from_vectors(std::move(full), P));
    }
    for (unsigned round = 0; round < 64; ++round) {
        bool all_lines = true;
        for (const auto& s : spaces)
            if (s.dim() > 1) { all_lines = false; break; }
        if (all_lines) break;

        std::mt19937 rng(0x5EED0000u + round);
        Mat M(k, Vec(k, 0));
        for (std::size_t i = 0; i < k; ++i) {
            const u64 r = (round < k) ? (i == round ? 1 : 0) : rng() % P;
            if (!r) continue;
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t m = 0; m < k; ++m)
                    M[j][m] = add_mod(M[j][m], mul_mod(r, A[i][j][m], P), P);
        }

        std::vector<Subspace> next;
        for (auto& s : spaces) {
            const std::size_t d = s.dim();
            if (d <= 1) { next.push_back(std::move(s)); continue; }
            // restriction B with M * b_c = sum_r B[r][c] b_r
            Mat B(d, Vec(d, 0));
            for (std::size_t c = 0; c < d; ++c) {
                const Vec coord = s.coordinates(mat_apply(M, s.basis[c], P), P);
                for (std::size_t r = 0; r < d; ++r) B[r][c] = coord[r];
            }
            const auto roots = poly_roots(char_poly(B, P), P);
            if (roots.size() <= 1) { next.push_back(std::move(s)); continue; }
            std::size_t found = 0;
            for (const u64 lam : roots) {
                Mat Bl = B;
                for (std::size_t i = 0; i < d; ++i) Bl[i][i] = sub_mod(Bl[i][i], lam, P);
                std::vector<Vec> lifted;
                for (const Vec& coord : nullspace(std::move(Bl), P)) {
                    Vec v(k, 0);
                    for (std::size_t r = 0; r < d; ++r)
                        if (coord[r])
                            for (std::size_t c = 0; c < k; ++c)
                                v[c] = add_mod(v[c], mul_mod(coord[r], s.basis[r][c], P), P);
                    lifted.push_back(std::move(v));
                }
                found += lifted.size();
                next.push_back(Subspace::from_vectors(std::move(lifted), P));
            }
            if (found != d) throw error("eigenspace dimensions do not add up");
        }
        spaces = std::move(next);
    }
    for (const auto& s : spaces)
        if (s.dim() != 1) throw error("failed to split eigenspaces into lines");
    if (spaces.size() != k) throw error("wrong number of common eigenlines");

    // normalise each line to the central-character vector (identity entry 1)
    const std::size_t idc = cd.identity_class();
    std::vector<Vec> omega;
    for (const auto& s : spaces) {
        Vec v = s.basis[0];
        if (v[idc] == 0) throw error("eigenline vanishes at the identity class");
        const u64 f = inv_mod(v[idc], P);
        for (auto& c : v) c = mul_mod(c, f, P);
        omega.push_back(std::move(v));
    }

    // degrees from 1/chi(1)^2 = (1/|G|) sum_j w_j w_{j-} / |C_j|
    const u64 g_mod = G.size() % P;
    std::vector<u64> inv_size(k), degree_mod(k);
    for (std::size_t j = 0; j < k; ++j) inv_size[j] = inv_mod(cd.cls(j).size % P, P);
    std::vector<u64> degrees(k);
    for (std::size_t t = 0; t < k; ++t) {
        u64 s = 0;
        for (std::size_t j = 0; j < k; ++j)
            s = add_mod(s, mul_mod(mul_mod(omega[t][j], omega[t][cd.cls(j).inverse_class], P),
                                   inv_size[j], P),
                        P);
        const u64 d2 = mul_mod(g_mod, inv_mod(s, P), P);
        u64 d = sqrt_mod(d2, P);
        if (d > P / 2) d = P - d;
        if (d == 0) throw error("character degree lifted to zero");
        degrees[t] = d;
        degree_mod[t] = d;
    }
    {
        std::uint64_t sq = 0;
        for (u64 d : degrees) sq += d * d;
        if (sq != G.size()) throw error("degree squares do not sum to the group order");
    }

    // lift values: chi(g_j) = sum_t m_t zeta_o^t with multiplicities by DFT
    const u64 w = primitive_root_mod(P);
    std::vector<std::vector<Cyclotomic>> rows(k);
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<u64> chi_mod(k);
        for (std::size_t j = 0; j < k; ++j)
            chi_mod[j] = mul_mod(mul_mod(degree_mod[t], omega[t][j], P), inv_size[j], P);
        rows[t].resize(k);
        for (std::size_t j = 0; j < k; ++j) {
            const auto& cls = cd.cls(j);
            const u64 o = static_cast<u64>(cls.element_order);
            const u64 z_inv = pow_mod(w, static_cast<u64>(P - 1) - (P - 1) / o, P);
            const u64 o_inv = inv_mod(o % P, P);
            Cyclotomic value;
            u64 msum = 0;
            for (u64 e = 0; e < o; ++e) {
                u64 acc = 0;
                u64 zp = 1;
                const u64 step = pow_mod(z_inv, e, P);
                for (u64 s = 0; s < o; ++s) {
                    acc = add_mod(acc, mul_mod(chi_mod[cls.power_classes[s]], zp, P), P);
                    zp = mul_mod(zp, step, P);
                }
                const u64 m = mul_mod(acc, o_inv, P);
                if (m > degrees[t]) throw error("lifted multiplicity exceeds the degree");
                msum += m;
                if (m) value += Cyclotomic::root_of_unity(static_cast<unsigned>(o),
                                                          static_cast<long long>(e)) *
                                Rational(m);
            }
            if (msum != degrees[t]) throw error("lifted multiplicities do not sum to the degree");
            rows[t][j] = std::move(value);
        }
    }

    std::sort(rows.begin(), rows.end(),
              [idc](const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
                  const Rational da = a[idc].rational_value(), db = b[idc].rational_value();
                  if (da != db) return da < db;
                  for (std::size_t j = 0; j < a.size(); ++j)
                      if (!(a[j] == b[j])) return cyclo_less(a[j], b[j]);
                  return false;
              });

    CharTable table;
    table.group_name = group_name;
    table.group_order = G.size();
    table.exponent = cd.exponent();
    table.classes.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        auto& c = table.classes[j];
        const auto& src = cd.cls(j);
        c.name = src.name;
        c.size = src.size;
        c.element_order = src.element_order;
        c.inverse = src.inverse_class;
        for (const auto& [p, target] : src.prime_power) c.prime_power[p] = target;
    }
    table.values = std::move(rows);
    table.validate();
    return table;
}

} // namespace pw
