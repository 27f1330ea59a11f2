#pragma once

#include <string>
#include <vector>

#include "pwidth/gf.hpp"

namespace pw {

// Square matrix over a small finite field. Entries are field codes
// (see FiniteField); immutable in group contexts.
class Matrix {
public:
    Matrix(const FiniteField& field, int n)
        : F_(&field), n_(n), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    static Matrix identity(const FiniteField& field, int n);

    const FiniteField& field() const { return *F_; }
    int dim() const { return n_; }

    int at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }
    void set(int i, int j, int v) { e_[static_cast<std::size_t>(i * n_ + j)] = v; }

    Matrix mul(const Matrix& rhs) const;
    Matrix inverse() const;
    Matrix transpose() const;
    // Entrywise x -> x^(p^s).
    Matrix frobenius(int s = 1) const;
    int det() const;
    bool is_identity() const;
    // rank of (this - identity); used for transvection checks
    int rank_minus_identity() const;

    // Packed byte string, one byte per entry (row major).
    std::string key() const;
    static Matrix from_key(const FiniteField& field, int n, const std::string& key);

    bool operator==(const Matrix& rhs) const { return e_ == rhs.e_; }

private:
    const FiniteField* F_;
    int n_;
    std::vector<std::uint8_t> e_;
};

} // namespace pw
