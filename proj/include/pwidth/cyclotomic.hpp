#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "pwidth/error.hpp"

namespace pw {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// An element of the e-th cyclotomic field in the canonical power basis
// 1, z, ..., z^{phi(e)-1} of Q(z), z = exp(2*pi*i/e), reduced modulo the
// e-th cyclotomic polynomial. Zero test is coefficient-vector-is-zero;
// rational values are normalised to conductor 1.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& r) : conductor_(1), coeffs_(1, r) {}
    explicit Cyclotomic(long long n) : conductor_(1), coeffs_(1, Rational(n)) {}

    // z_e^k, stored at conductor e / gcd(e, k).
    static Cyclotomic root_of_unity(unsigned e, long long k);

    // From explicit coefficients over conductor e (length phi(e)).
    static Cyclotomic from_coefficients(unsigned e, std::vector<Rational> coeffs);

    unsigned conductor() const { return conductor_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const { return conductor_ == 1; }
    Rational rational_value() const;

    // Galois action z -> z^t, gcd(t, conductor) = 1.
    Cyclotomic galois(long long t) const;
    // Complex conjugation z -> z^{-1}.
    Cyclotomic conjugate() const { return galois(-1); }

    // Representation of the same value over a conductor that is a multiple
    // of the current one.
    Cyclotomic lifted(unsigned multiple_conductor) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Rational& s);
    Cyclotomic& operator/=(const Rational& s);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }

    bool operator==(const Cyclotomic& rhs) const;

    std::string to_string() const;

    static unsigned phi(unsigned e);
    // Monic integer coefficients, constant term first, length phi(e)+1.
    static const std::vector<Int>& cyclotomic_polynomial(unsigned e);

private:
    void normalize();

    unsigned conductor_;
    std::vector<Rational> coeffs_;
};

} // namespace pw
