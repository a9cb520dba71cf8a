#include "doctest.h"

#include "binic/ffpoly.hpp"
#include "binic/hensel.hpp"
#include "binic/zx_factor.hpp"

#include <random>

using namespace binic;

namespace {

FpPoly random_fp(Rng& rng, long p, int deg) {
    std::uniform_int_distribution<long> d(0, p - 1);
    std::vector<long> c(static_cast<std::size_t>(deg) + 1);
    for (long& v : c) v = d(rng);
    if (c.back() == 0) c.back() = 1;
    return FpPoly(p, std::move(c));
}

}  // namespace

TEST_CASE("F_p factorization reassembles and factors are irreducible") {
    Rng rng(101);
    for (long p : {2L, 3L, 5L, 7L, 11L, 101L}) {
        for (int t = 0; t < 30; ++t) {
            FpPoly f = random_fp(rng, p, 1 + static_cast<int>(t % 6));
            FpFactorization fac = fp_factor(f, 42 + static_cast<std::uint64_t>(t));
            FpPoly prod = fp_constant(p, fac.unit);
            for (const FpFactor& g : fac.factors) {
                CHECK(fp_is_irreducible(g.poly));
                for (int m = 0; m < g.multiplicity; ++m) prod = fp_mul(prod, g.poly);
            }
            CHECK(prod == f);
        }
    }
}

TEST_CASE("irreducible tables vs direct irreducibility") {
    CHECK(fp_irreducibles(2, 1).size() == 2);
    CHECK(fp_irreducibles(2, 2).size() == 1);   // x^2+x+1
    CHECK(fp_irreducibles(2, 3).size() == 2);
    CHECK(fp_irreducibles(3, 2).size() == 3);   // (9-3)/2
    CHECK(fp_irreducibles(5, 2).size() == 10);  // (25-5)/2
    for (const FpPoly& f : fp_irreducibles(3, 3)) CHECK(fp_is_irreducible(f));
    CHECK(fp_irreducibles(3, 3).size() == 8);  // (27-3)/3
}

TEST_CASE("perfect squares mod p") {
    // (x^2+x+2)^2 mod 5
    FpPoly h(5, {2, 1, 1});
    CHECK(fp_even_multiplicities(fp_mul(h, h)));
    CHECK_FALSE(fp_even_multiplicities(h));
    CHECK_FALSE(fp_even_multiplicities(fp_mul(h, fp_mul(h, h))));
}

TEST_CASE("hensel pair lifting reproduces the input modulo p^k") {
    // f = (x^2+2)(x+3) mod 5, perturbed above 5: x^3+3x^2+2x+31
    const long p = 5;
    const int k = 4;
    const Int pk = pow_int(Int(p), k);
    std::vector<Int> f{Int(31), Int(2), Int(3), Int(1)};
    FpPoly gbar(p, {3, 1}), hbar(p, {2, 0, 1});
    auto [G, H] = hensel_lift_pair(f, gbar, hbar, p, k);
    ZmPoly prod = zm_mul(G, H, pk);
    CHECK(prod == zm_reduce(f, pk));
    CHECK(H.back() == 1);
}

TEST_CASE("hensel multifactor lifting") {
    // f = (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6 mod 7^3
    const long p = 7;
    const int k = 3;
    const Int pk = pow_int(Int(p), k);
    std::vector<Int> f{Int(-6), Int(11), Int(-6), Int(1)};
    std::vector<FpPoly> hb{FpPoly(p, {-1, 1}), FpPoly(p, {-2, 1}), FpPoly(p, {-3, 1})};
    auto lifted = hensel_lift_monic(f, hb, p, k);
    REQUIRE(lifted.size() == 3);
    ZmPoly prod{Int(1)};
    for (const auto& h : lifted) {
        CHECK(h.back() == 1);
        prod = zm_mul(prod, h, pk);
    }
    CHECK(prod == zm_reduce(f, pk));
}

TEST_CASE("integer factorization: known splits") {
    // (x^2+1)(x^2-2)
    std::vector<Int> f{Int(-2), Int(0), Int(-1), Int(0), Int(1)};
    auto fac = zx_factor(f);
    CHECK(fac.factors.size() == 2);

    // irreducible cubics
    CHECK(zx_is_irreducible({Int(-1), Int(-1), Int(0), Int(1)}));  // x^3-x-1
    CHECK(zx_is_irreducible({Int(-2), Int(0), Int(0), Int(1)}));   // x^3-2
    // Simon's dehomogenized cubic 6x^3+5x^2+10x+7 ... reversed: f(x,1)
    CHECK(zx_is_irreducible({Int(6), Int(5), Int(10), Int(7)}));

    // product of two distinct irreducible cubics
    std::vector<Int> c1{Int(-1), Int(-1), Int(0), Int(1)};
    std::vector<Int> c2{Int(-2), Int(0), Int(0), Int(1)};
    std::vector<Int> prod(7, Int(0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) prod[static_cast<std::size_t>(i + j)] += c1[static_cast<std::size_t>(i)] * c2[static_cast<std::size_t>(j)];
    CHECK(zx_irreducible_factor_count(prod) == 2);

    // multiplicities: (x-1)^2 (x+2)
    std::vector<Int> g{Int(2), Int(-3), Int(0), Int(1)};
    auto gf = zx_factor(g);
    CHECK(gf.factors.size() == 2);
    int mults = 0;
    for (auto& [q, m] : gf.factors) mults += m;
    CHECK(mults == 3);
}

TEST_CASE("integer factorization: random products reassemble") {
    Rng rng(202);
    for (int t = 0; t < 30; ++t) {
        // random product of two small polys
        auto rnd = [&](int deg) {
            std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
            for (auto& v : c) v = random_int(rng, -8, 8);
            if (c.back() == 0) c.back() = 1;
            return c;
        };
        std::vector<Int> a = rnd(2 + static_cast<int>(t % 2)), b = rnd(2);
        std::vector<Int> prod(a.size() + b.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
        if (prod.back() == 0) continue;
        auto fac = zx_factor(prod);
        // reassemble
        std::vector<Int> re{Int(1)};
        Rat unit = fac.unit;
        for (auto& [q, m] : fac.factors)
            for (int i = 0; i < m; ++i) {
                std::vector<Int> nr(re.size() + q.size() - 1, Int(0));
                for (std::size_t x = 0; x < re.size(); ++x)
                    for (std::size_t y = 0; y < q.size(); ++y) nr[x + y] += re[x] * q[y];
                re = std::move(nr);
            }
        REQUIRE(is_integer(unit));
        for (auto& v : re) v *= unit.get_num();
        CHECK(re == prod);
    }
}
