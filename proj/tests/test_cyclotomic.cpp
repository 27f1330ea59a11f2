#include <doctest.h>

#include "pwidth/cyclotomic.hpp"

using pw::Cyclotomic;
using pw::Int;
using pw::Rational;

namespace {

Cyclotomic zeta(unsigned e, long long k = 1) { return Cyclotomic::root_of_unity(e, k); }

} // namespace

TEST_CASE("cyclotomic polynomials") {
    using V = std::vector<Int>;
    CHECK(Cyclotomic::cyclotomic_polynomial(1) == V{-1, 1});
    CHECK(Cyclotomic::cyclotomic_polynomial(2) == V{1, 1});
    CHECK(Cyclotomic::cyclotomic_polynomial(3) == V{1, 1, 1});
    CHECK(Cyclotomic::cyclotomic_polynomial(4) == V{1, 0, 1});
    CHECK(Cyclotomic::cyclotomic_polynomial(6) == V{1, -1, 1});
    CHECK(Cyclotomic::cyclotomic_polynomial(8) == V{1, 0, 0, 0, 1});
    CHECK(Cyclotomic::cyclotomic_polynomial(12) == V{1, 0, -1, 0, 1});
    // Phi_105 is the first with a coefficient outside {-1,0,1}
    const auto& p105 = Cyclotomic::cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(p105[7] == -2);
    CHECK(Cyclotomic::phi(1) == 1);
    CHECK(Cyclotomic::phi(12) == 4);
    CHECK(Cyclotomic::phi(105) == 48);
}

TEST_CASE("roots of unity") {
    CHECK(zeta(1) == Cyclotomic(1));
    CHECK(zeta(2) == Cyclotomic(-1));
    CHECK(zeta(4, 2) == Cyclotomic(-1)); // conductor reduces by gcd
    CHECK(zeta(6, 3) == Cyclotomic(-1));
    CHECK(zeta(5).conductor() == 5);
    CHECK(zeta(5, -1) == zeta(5, 4));

    // z_e^e = 1 and sum of all e-th roots is 0
    for (unsigned e : {3u, 4u, 5u, 6u, 7u, 8u, 9u, 12u}) {
        Cyclotomic power(1);
        Cyclotomic sum(0);
        for (unsigned k = 0; k < e; ++k) {
            power *= zeta(e);
            sum += zeta(e, k);
        }
        CHECK(power == Cyclotomic(1));
        CHECK(sum.is_zero());
    }
}

TEST_CASE("arithmetic identities") {
    // 1 + z3 + z3^2 = 0
    CHECK((Cyclotomic(1) + zeta(3) + zeta(3, 2)).is_zero());

    // (z5 + z5^4)(z5^2 + z5^3) = -1: golden-ratio product
    const Cyclotomic a = zeta(5) + zeta(5, 4);
    const Cyclotomic b = zeta(5, 2) + zeta(5, 3);
    CHECK(a * b == Cyclotomic(-1));
    CHECK((a + b) == Cyclotomic(-1));

    // (z8 + z8^-1)^2 = 2
    const Cyclotomic s = zeta(8) + zeta(8, -1);
    CHECK(s * s == Cyclotomic(2));
    CHECK(s.conjugate() == s);

    // mixed conductors: z3 * z4 = z12^7
    CHECK(zeta(3) * zeta(4) == zeta(12, 7));
    CHECK((zeta(3) + zeta(4)).conductor() == 12);
}

TEST_CASE("rational collapse and scalars") {
    Cyclotomic x = zeta(7);
    x -= zeta(7);
    CHECK(x.is_zero());
    CHECK(x.is_rational());

    Cyclotomic y = zeta(3) * Rational(2) + zeta(3, 2) * Rational(2);
    CHECK(y.is_rational());
    CHECK(y.rational_value() == -2);

    Cyclotomic h(Rational(1, 2));
    CHECK((h + h).rational_value() == 1);
    CHECK((zeta(5) * h * Rational(2)) == zeta(5));
    Cyclotomic d = zeta(5);
    d /= Rational(1, 3);
    CHECK(d == zeta(5) * Rational(3));

    CHECK_THROWS_AS(zeta(5).rational_value(), pw::error);
}

TEST_CASE("lifting and galois action") {
    // equality across conductors
    CHECK(zeta(3).lifted(12) == zeta(3));
    CHECK(zeta(3).lifted(6) == zeta(6, 2));

    // galois permutes roots: z5 -> z5^2 twice is z5^4 = conjugate
    CHECK(zeta(5).galois(2).galois(2) == zeta(5).conjugate());
    CHECK_THROWS_AS(zeta(6).galois(2), pw::error);

    // conjugation is a ring homomorphism
    const Cyclotomic u = zeta(12) + zeta(12, 5) * Rational(3);
    const Cyclotomic v = zeta(12, 7) - Cyclotomic(2);
    CHECK((u * v).conjugate() == u.conjugate() * v.conjugate());
    CHECK((u + v).conjugate() == u.conjugate() + v.conjugate());
    // norm of a real combination is rational here: u * conj(u) for u = 1 + z4
    const Cyclotomic w = Cyclotomic(1) + zeta(4);
    CHECK(w * w.conjugate() == Cyclotomic(2));
}

TEST_CASE("printing") {
    CHECK(Cyclotomic(0).to_string() == "0");
    CHECK(Cyclotomic(Rational(-3, 2)).to_string() == "-3/2");
    CHECK(zeta(5).to_string() == "z5");
    CHECK((zeta(5, 2) * Rational(2)).to_string() == "2*z5^2");
    CHECK((Cyclotomic(1) - zeta(3)).to_string() == "1 - z3");
}
