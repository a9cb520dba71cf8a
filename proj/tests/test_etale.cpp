#include "doctest.h"

#include "binic/based_ideal.hpp"
#include "binic/rf_order.hpp"

#include <random>

using namespace binic;

namespace {

BinaryForm random_separable(Rng& rng, int n, long box) {
    while (true) {
        std::vector<Int> c(static_cast<std::size_t>(n) + 1);
        for (auto& v : c) v = random_int(rng, -box, box);
        if (c[0] == 0) c[0] = 1;
        BinaryForm F(n, std::move(c));
        if (is_separable(F)) return F;
    }
}

AlgebraElement random_element(Rng& rng, const RfOrder& ord, long box) {
    AlgebraElement u{std::vector<Rat>(static_cast<std::size_t>(ord.n()))};
    for (auto& v : u.coords) v = Rat(random_int(rng, -box, box));
    return u;
}

const BinaryForm kSimon(3, {Int(7), Int(10), Int(5), Int(6)});

}  // namespace

TEST_CASE("multiplication table specializations for cubics") {
    Rng rng(40);
    for (int t = 0; t < 25; ++t) {
        BinaryForm F = random_separable(rng, 3, 10);
        RfOrder ord(F);
        // zeta_1^2 = f_0 zeta_2 - f_1 zeta_1
        AlgebraElement lhs = ord.mul(ord.zeta(1), ord.zeta(1));
        AlgebraElement rhs = ord.sub(ord.scale(Rat(F.coeff(0)), ord.zeta(2)),
                                     ord.scale(Rat(F.coeff(1)), ord.zeta(1)));
        CHECK(lhs == rhs);
        // zeta_1 zeta_2 = -f_0 f_3 - f_2 zeta_1
        AlgebraElement lhs2 = ord.mul(ord.zeta(1), ord.zeta(2));
        AlgebraElement rhs2 = ord.sub(ord.from_int(Rat(-F.coeff(0) * F.coeff(3))),
                                      ord.scale(Rat(F.coeff(2)), ord.zeta(1)));
        CHECK(lhs2 == rhs2);
    }
}

TEST_CASE("structure constants match polynomial arithmetic") {
    Rng rng(41);
    for (int t = 0; t < 60; ++t) {
        int n = 3 + static_cast<int>(t % 4);
        RfOrder ord(random_separable(rng, n, 20));
        for (int i = 1; i < n; ++i)
            for (int j = i; j < n; ++j)
                CHECK(ord.mul(ord.zeta(i), ord.zeta(j)) ==
                      ord.mul_via_polynomials(ord.zeta(i), ord.zeta(j)));
        // associativity and commutativity on a random triple
        AlgebraElement a = random_element(rng, ord, 5), b = random_element(rng, ord, 5),
                       c = random_element(rng, ord, 5);
        CHECK(ord.mul(a, b) == ord.mul(b, a));
        CHECK(ord.mul(ord.mul(a, b), c) == ord.mul(a, ord.mul(b, c)));
    }
}

TEST_CASE("zeta_i = p_i(theta) in theta coordinates") {
    Rng rng(42);
    for (int t = 0; t < 20; ++t) {
        int n = 3 + static_cast<int>(t % 4);
        RfOrder ord(random_separable(rng, n, 12));
        CHECK(ord.mul(ord.from_int(Rat(ord.f0())), ord.theta()) == ord.zeta(1));
        for (int i = 1; i < n; ++i) {
            // evaluate p_i at theta by Horner in the algebra
            std::vector<Int> p = ord.p_poly(i);
            AlgebraElement acc = ord.from_int(Rat(0));
            for (std::size_t k = p.size(); k-- > 0;)
                acc = ord.add(ord.mul(acc, ord.theta()), ord.from_int(Rat(p[k])));
            CHECK(acc == ord.zeta(i));
        }
    }
}

TEST_CASE("element arithmetic in x^3 - 2") {
    RfOrder ord(BinaryForm(3, {Int(1), Int(0), Int(0), Int(-2)}));
    AlgebraElement th = ord.theta();
    CHECK(ord.mul(th, ord.mul(th, th)) == ord.from_int(Rat(2)));
    CHECK(ord.norm(ord.one()) == 1);
    CHECK(ord.norm(ord.add(ord.one(), th)) == 3);
    AlgebraElement u = ord.add(ord.one(), th);
    CHECK(ord.mul(u, ord.inverse(u)) == ord.one());
}

TEST_CASE("norm is multiplicative") {
    Rng rng(43);
    for (int t = 0; t < 100; ++t) {
        int n = 3 + static_cast<int>(t % 3);
        RfOrder ord(random_separable(rng, n, 8));
        AlgebraElement u = random_element(rng, ord, 6), v = random_element(rng, ord, 6);
        CHECK(ord.norm(ord.mul(u, v)) == ord.norm(u) * ord.norm(v));
    }
}

TEST_CASE("mul via table equals mul via polynomials on random elements") {
    Rng rng(44);
    for (int t = 0; t < 60; ++t) {
        int n = 3 + static_cast<int>(t % 4);
        RfOrder ord(random_separable(rng, n, 10));
        AlgebraElement u = random_element(rng, ord, 7), v = random_element(rng, ord, 7);
        CHECK(ord.mul(u, v) == ord.mul_via_polynomials(u, v));
    }
}

TEST_CASE("power ideals: bases, norms, products") {
    RfOrder simon(kSimon);
    CHECK(power_ideal_basis(simon, 0).basis() == MatQ::identity(3));
    CHECK(power_ideal_basis(simon, 0).norm() == 1);
    CHECK(power_ideal_basis(simon, 1).norm() == Rat(1, 7));
    CHECK_THROWS_AS(power_ideal_basis(simon, 3), invalid_input);

    Rng rng(45);
    for (int t = 0; t < 30; ++t) {
        int n = 3 + static_cast<int>(t % 4);
        RfOrder ord(random_separable(rng, n, 9));
        for (int k = 0; k < n; ++k) {
            BasedIdeal I = power_ideal_basis(ord, k);
            CHECK(I.is_module(ord));
            Rat expect = 1 / pow_rat(Rat(ord.f0()), static_cast<unsigned long>(k));
            CHECK(I.norm() == expect);
        }
    }

    // I_F^1 * I_F^1 = I_F^2 for the Simon form
    BasedIdeal I1 = power_ideal_basis(simon, 1);
    BasedIdeal I2 = power_ideal_basis(simon, 2);
    CHECK(ideal_product(simon, I1, I1).same_lattice(I2));

    // unit ideal is neutral
    BasedIdeal R = unit_ideal(simon);
    CHECK(ideal_product(simon, R, I1).same_lattice(I1));
}

TEST_CASE("module property is preserved by products") {
    Rng rng(46);
    for (int t = 0; t < 20; ++t) {
        int n = 3 + static_cast<int>(t % 3);
        RfOrder ord(random_separable(rng, n, 8));
        BasedIdeal I = power_ideal_basis(ord, static_cast<int>(t) % n);
        BasedIdeal J = power_ideal_basis(ord, static_cast<int>(t + 1) % n);
        BasedIdeal P = ideal_product(ord, I, J);
        CHECK(P.is_module(ord));
    }
}

TEST_CASE("norms of products of principal ideals") {
    Rng rng(47);
    for (int t = 0; t < 40; ++t) {
        RfOrder ord(random_separable(rng, 3, 8));
        AlgebraElement a = random_element(rng, ord, 5), b = random_element(rng, ord, 5);
        if (ord.norm(a) == 0 || ord.norm(b) == 0) continue;
        BasedIdeal A = principal_ideal(ord, a), B = principal_ideal(ord, b);
        CHECK(A.norm() == ord.norm(a));
        BasedIdeal P = ideal_product(ord, A, B);
        CHECK(P.same_lattice(principal_ideal(ord, ord.mul(a, b))));
        CHECK(abs(P.norm()) == abs(ord.norm(a) * ord.norm(b)));
    }
}

TEST_CASE("colon ideals and invertibility") {
    RfOrder simon(kSimon);
    BasedIdeal I1 = power_ideal_basis(simon, 1);
    CHECK(is_invertible(simon, I1));
    BasedIdeal inv = colon_ideal(simon, unit_ideal(simon), I1);
    CHECK(ideal_product(simon, I1, inv).same_lattice(unit_ideal(simon)));

    // imprimitive forms are not Gorenstein: I_F^1 fails invertibility
    RfOrder bad(BinaryForm(3, {Int(2), Int(0), Int(0), Int(-2)}));
    CHECK_FALSE(is_invertible(bad, power_ideal_basis(bad, 1)));

    // scaling: N(kappa I) = N(kappa) N(I)
    Rng rng(48);
    for (int t = 0; t < 20; ++t) {
        RfOrder ord(random_separable(rng, 4, 6));
        AlgebraElement k = random_element(rng, ord, 4);
        if (ord.norm(k) == 0) continue;
        BasedIdeal I = power_ideal_basis(ord, 2);
        CHECK(scale_ideal(ord, k, I).norm() == ord.norm(k) * I.norm());
    }
}

TEST_CASE("ring transport along translation is multiplicative") {
    Rng rng(49);
    for (int t = 0; t < 40; ++t) {
        int n = 3 + static_cast<int>(t % 3);
        BinaryForm F = random_separable(rng, n, 7);
        Int s = random_int(rng, -4, 4);
        RfOrder ord(F), ordp(m1_act(F, s));
        AlgebraElement u = random_element(rng, ord, 5), v = random_element(rng, ord, 5);
        AlgebraElement up = transport_m1(ord, ordp, s, u), vp = transport_m1(ord, ordp, s, v);
        CHECK(transport_m1(ord, ordp, s, ord.mul(u, v)) == ordp.mul(up, vp));
        // transport is a bijection on the lattice R_F exactly when s is
        // integral: zeta-basis goes to integral coordinates
        AlgebraElement z = transport_m1(ord, ordp, s, ord.zeta(n - 1));
        CHECK(z.is_integral());
    }
}
