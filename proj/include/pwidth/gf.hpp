#pragma once

#include <cstdint>
#include <vector>

#include "pwidth/error.hpp"

namespace pw {

// The field with l^k elements. Elements are encoded as integers in
// [0, l^k): the base-l digits are the coefficients of the polynomial
// representative modulo the lexicographically smallest monic irreducible
// polynomial of degree k over F_l. Full add/mul tables are precomputed,
// so instances are only built for small fields.
class FiniteField {
public:
    static const FiniteField& get(int characteristic, int degree);

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    int size() const { return q_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg_[static_cast<std::size_t>(b)])]; }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int inv(int a) const;
    int pow(int a, long long e) const;
    // x -> x^l, the generating field automorphism.
    int frobenius(int a) const { return pow(a, p_); }

    // A fixed generator of the multiplicative group.
    int primitive_element() const { return prim_; }

    // Coefficients of the modulus, constant term first (length k+1, monic).
    const std::vector<int>& modulus() const { return mod_; }

private:
    FiniteField(int p, int k);

    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b);
    }

    int p_, k_, q_, prim_;
    std::vector<int> mod_;
    std::vector<int> add_, mul_, neg_, inv_;
};

bool is_prime(long long n);

} // namespace pw
