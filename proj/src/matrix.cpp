#include "pwidth/matrix.hpp"

namespace pw {

Matrix Matrix::identity(const FiniteField& field, int n) {
    Matrix m(field, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::mul(const Matrix& rhs) const {
    const FiniteField& F = *F_;
    Matrix out(F, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int acc = 0;
            for (int t = 0; t < n_; ++t)
                acc = F.add(acc, F.mul(at(i, t), rhs.at(t, j)));
            out.set(i, j, acc);
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(*F_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.set(j, i, at(i, j));
    return out;
}

Matrix Matrix::frobenius(int s) const {
    const FiniteField& F = *F_;
    Matrix out(F, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int v = at(i, j);
            for (int t = 0; t < s; ++t) v = F.frobenius(v);
            out.set(i, j, v);
        }
    return out;
}

namespace {

// Gauss-Jordan over the field; returns rank, optionally accumulating the
// inverse and determinant.
int gauss(const FiniteField& F, std::vector<int>& a, int n, std::vector<int>* inv, int* det) {
    if (inv) {
        inv->assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) (*inv)[static_cast<std::size_t>(i * n + i)] = 1;
    }
    int d = 1;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (a[static_cast<std::size_t>(r * n + col)] != 0) { piv = r; break; }
        if (piv < 0) { d = 0; continue; }
        if (piv != rank) {
            for (int j = 0; j < n; ++j) {
                std::swap(a[static_cast<std::size_t>(piv * n + j)], a[static_cast<std::size_t>(rank * n + j)]);
                if (inv) std::swap((*inv)[static_cast<std::size_t>(piv * n + j)], (*inv)[static_cast<std::size_t>(rank * n + j)]);
            }
            d = F.neg(d);
        }
        const int pv = a[static_cast<std::size_t>(rank * n + col)];
        d = F.mul(d, pv);
        const int pinv = F.inv(pv);
        for (int j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(rank * n + j)] = F.mul(a[static_cast<std::size_t>(rank * n + j)], pinv);
            if (inv) (*inv)[static_cast<std::size_t>(rank * n + j)] = F.mul((*inv)[static_cast<std::size_t>(rank * n + j)], pinv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            const int f = a[static_cast<std::size_t>(r * n + col)];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                a[static_cast<std::size_t>(r * n + j)] =
                    F.sub(a[static_cast<std::size_t>(r * n + j)], F.mul(f, a[static_cast<std::size_t>(rank * n + j)]));
                if (inv)
                    (*inv)[static_cast<std::size_t>(r * n + j)] =
                        F.sub((*inv)[static_cast<std::size_t>(r * n + j)], F.mul(f, (*inv)[static_cast<std::size_t>(rank * n + j)]));
            }
        }
        ++rank;
    }
    if (rank < n) d = 0;
    if (det) *det = d;
    return rank;
}

} // namespace

Matrix Matrix::inverse() const {
    std::vector<int> a(e_.begin(), e_.end());
    std::vector<int> inv;
    int det = 0;
    gauss(*F_, a, n_, &inv, &det);
    if (det == 0) throw error("matrix is singular");
    Matrix out(*F_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.set(i, j, inv[static_cast<std::size_t>(i * n_ + j)]);
    return out;
}

int Matrix::det() const {
    std::vector<int> a(e_.begin(), e_.end());
    int d = 0;
    gauss(*F_, a, n_, nullptr, &d);
    return d;
}

bool Matrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

int Matrix::rank_minus_identity() const {
    const FiniteField& F = *F_;
    std::vector<int> a(e_.begin(), e_.end());
    for (int i = 0; i < n_; ++i)
        a[static_cast<std::size_t>(i * n_ + i)] = F.sub(a[static_cast<std::size_t>(i * n_ + i)], 1);
    return gauss(F, a, n_, nullptr, nullptr);
}

std::string Matrix::key() const {
    return std::string(reinterpret_cast<const char*>(e_.data()), e_.size());
}

Matrix Matrix::from_key(const FiniteField& field, int n, const std::string& key) {
    Matrix m(field, n);
    if (key.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw error("bad matrix key length");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.set(i, j, static_cast<std::uint8_t>(key[static_cast<std::size_t>(i * n + j)]));
    return m;
}

} // namespace pw
