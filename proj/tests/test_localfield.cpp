#include "doctest.h"

#include "binic/local_field.hpp"
#include "binic/rf_order.hpp"

#include <random>

using namespace binic;

namespace {

const BinaryForm kSimon(3, {Int(7), Int(10), Int(5), Int(6)});

// Independent maximality oracle for cubic residue classes mod p^2:
// R_F is p-maximal iff no proper subspace V of (1/p)R_F / R_F makes
// R_F + V a ring. Works on any integral lift of the residue data.
bool superlattice_oracle(const BinaryForm& F, long p) {
    // separable integral lift congruent to F mod p^2 (the closure test only
    // depends on the residues)
    BinaryForm lift = F;
    Int p2(p * p);
    {
        std::vector<Int> c = F.coeffs();
        if (c[0] == 0) c[0] = p2;
        long t = 0;
        while (true) {
            BinaryForm cand(F.degree(), c);
            if (is_separable(cand)) {
                lift = cand;
                break;
            }
            ++t;
            c[static_cast<std::size_t>(F.degree())] += p2;
            if (t > 16) throw std::logic_error("no separable lift found");
        }
    }
    RfOrder ord(lift);
    const int n = ord.n();

    // multiplication matrices of zeta_i mod p on R_F / p R_F, and integer
    // products for the w^2 test
    std::vector<MatQ> mult;
    for (int i = 1; i < n; ++i) mult.push_back(ord.mult_matrix(ord.zeta(i)));

    auto in_span_mod_p = [&](const std::vector<long>& vec,
                             const std::vector<std::vector<long>>& span) {
        // Gaussian elimination over F_p
        std::vector<std::vector<long>> rows = span;
        std::vector<long> v = vec;
        for (auto& r : rows) {
            // find pivot
            std::size_t piv = 0;
            while (piv < r.size() && r[piv] == 0) ++piv;
            if (piv == r.size()) continue;
            long inv = 1;
            for (long x = 1; x < p; ++x)
                if (x * r[piv] % p == 1) inv = x;
            if (v[piv] != 0) {
                long f = v[piv] * inv % p;
                for (std::size_t k = 0; k < v.size(); ++k)
                    v[k] = ((v[k] - f * r[k]) % p + p) % p;
            }
        }
        for (long x : v)
            if (x != 0) return false;
        return true;
    };

    // all proper nonzero subspaces of F_p^n given by row-reduced generators:
    // enumerate all subsets of nonzero vectors is wasteful; for n = 3 it is
    // enough to enumerate spans of one or two vectors.
    std::vector<std::vector<std::vector<long>>> subspaces;
    std::vector<std::vector<long>> vecs;
    {
        std::vector<long> v(static_cast<std::size_t>(n), 0);
        while (true) {
            std::size_t i = 0;
            while (i < v.size() && v[i] == p - 1) v[i++] = 0;
            if (i == v.size()) break;
            ++v[i];
            vecs.push_back(v);
        }
    }
    for (std::size_t a = 0; a < vecs.size(); ++a) {
        subspaces.push_back({vecs[a]});
        for (std::size_t b = a + 1; b < vecs.size(); ++b)
            if (!in_span_mod_p(vecs[b], {vecs[a]})) subspaces.push_back({vecs[a], vecs[b]});
    }

    for (const auto& gens : subspaces) {
        // closure of L = R + span(gens)/p under multiplication
        bool closed = true;
        // products w * zeta_i stay in L  <=>  (v M_i mod p) in span
        for (const auto& v : gens) {
            for (const MatQ& M : mult) {
                std::vector<long> prod(static_cast<std::size_t>(n), 0);
                for (std::size_t k = 0; k < prod.size(); ++k) {
                    Rat s = 0;
                    for (std::size_t l = 0; l < prod.size(); ++l)
                        s += Rat(v[l]) * M.at(l, k);
                    REQUIRE(is_integer(s));
                    prod[k] = static_cast<long>(mpz_fdiv_ui(s.get_num().get_mpz_t(),
                                                            static_cast<unsigned long>(p)));
                }
                if (!in_span_mod_p(prod, gens)) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        // products w w' in L: (v M_{v'} / p mod p) must land in span and the
        // product must be divisible by p
        if (closed) {
            for (std::size_t a = 0; a < gens.size() && closed; ++a)
                for (std::size_t b = a; b < gens.size() && closed; ++b) {
                    AlgebraElement ua{std::vector<Rat>(static_cast<std::size_t>(n))},
                        ub{std::vector<Rat>(static_cast<std::size_t>(n))};
                    for (std::size_t k = 0; k < ua.coords.size(); ++k) {
                        ua.coords[k] = Rat(gens[a][k]);
                        ub.coords[k] = Rat(gens[b][k]);
                    }
                    AlgebraElement prod = ord.mul(ua, ub);  // integer coords
                    std::vector<long> quot(static_cast<std::size_t>(n), 0);
                    bool divisible = true;
                    for (std::size_t k = 0; k < quot.size(); ++k) {
                        REQUIRE(is_integer(prod.coords[k]));
                        Int num = prod.coords[k].get_num();
                        if (mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
                            divisible = false;
                            break;
                        }
                        Int q = num / p;
                        quot[k] = static_cast<long>(
                            mpz_fdiv_ui(q.get_mpz_t(), static_cast<unsigned long>(p)));
                    }
                    if (!divisible || !in_span_mod_p(quot, gens)) closed = false;
                }
        }
        if (closed) return false;  // found a superorder: not maximal
    }
    return true;
}

}  // namespace

TEST_CASE("canonical factorization: Simon form at 7, x^3 - 2z^3 at 5") {
    LocalFactorization f = canonical_factorization(kSimon, Int(7), 2);
    CHECK(f.e1 == 1);
    CHECK(f.nu == 1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].multiplicity == 1);
    CHECK(f.factors[1].multiplicity == 1);
    CHECK(f.factors[0].degree == 1);
    CHECK(f.factors[1].degree == 1);
    CHECK(f.reassembles(kSimon));

    BinaryForm g(3, {Int(1), Int(0), Int(0), Int(-2)});
    LocalFactorization f5 = canonical_factorization(g, Int(5), 2);
    CHECK(f5.e1 == 0);
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0].degree + f5.factors[1].degree == 3);
    CHECK(f5.reassembles(g));
}

TEST_CASE("canonical factorization: separable reduction has multiplicity one") {
    Rng rng(70);
    for (int t = 0; t < 40; ++t) {
        int n = 3 + static_cast<int>(t % 3);
        std::vector<Int> c(static_cast<std::size_t>(n) + 1);
        for (auto& v : c) v = random_int(rng, -30, 30);
        if (c[0] == 0) c[0] = 1;
        BinaryForm F(n, c);
        if (!is_separable(F)) continue;
        Int d = discriminant(F);
        for (Int p : {Int(3), Int(5), Int(7), Int(11)}) {
            if (d % p == 0 || F.leading() % p == 0) continue;
            LocalFactorization f = canonical_factorization(F, p, 3);
            for (const LocalFactor& fac : f.factors) CHECK(fac.multiplicity == 1);
            CHECK(f.e1 == 0);
            CHECK(f.reassembles(F));
        }
    }
}

TEST_CASE("factorization reassembles at higher precision") {
    Rng rng(71);
    for (int t = 0; t < 60; ++t) {
        int n = 3 + static_cast<int>(t % 4);
        std::vector<Int> c(static_cast<std::size_t>(n) + 1);
        for (auto& v : c) v = random_int(rng, -50, 50);
        if (c[0] == 0) c[0] = 1;
        BinaryForm F(n, c);
        for (Int p : {Int(2), Int(3), Int(5), Int(7)}) {
            if (!F.is_primitive_at(p)) continue;
            for (int k : {1, 2, 4}) {
                LocalFactorization f = canonical_factorization(F, p, k);
                CHECK(f.reassembles(F));
                int total = f.e1;
                for (const LocalFactor& fac : f.factors)
                    total += fac.multiplicity * fac.degree;
                CHECK(total == n);
            }
        }
    }
}

TEST_CASE("Dedekind criterion: ramified cubics") {
    for (long p : {2L, 3L, 5L, 7L}) {
        BinaryForm f1(3, {Int(1), Int(0), Int(0), Int(-p)});
        CHECK(is_maximal_at(f1, Int(p)));
        BinaryForm f2(3, {Int(1), Int(0), Int(0), Int(-p * p)});
        CHECK_FALSE(is_maximal_at(f2, Int(p)));
    }
    // p^2 does not divide disc => maximal at p
    Rng rng(72);
    for (int t = 0; t < 50; ++t) {
        std::vector<Int> c(4);
        for (auto& v : c) v = random_int(rng, -20, 20);
        if (c[0] == 0) c[0] = 1;
        BinaryForm F(3, c);
        if (!is_separable(F)) continue;
        Int d = discriminant(F);
        for (Int p : {Int(2), Int(3), Int(5)}) {
            if (!F.is_primitive_at(p)) continue;
            if (valuation(d, p) < 2) CHECK(is_maximal_at(F, p));
        }
    }
    // imprimitive input is reported distinctly
    CHECK(dedekind_maximality(BinaryForm(3, {Int(3), Int(3), Int(3), Int(3)}), Int(3)) ==
          Maximality::imprimitive);
}

TEST_CASE("Simon form is maximal at 7 but not at 2") {
    CHECK(is_maximal_at(kSimon, Int(7)));
    CHECK_FALSE(is_maximal_at(kSimon, Int(2)));
    CHECK_FALSE(is_maximal_order(kSimon));
    CHECK(discriminant(kSimon) == Int(-34828));  // = -2^2 * 8707
}

TEST_CASE("Dedekind vs superlattice oracle, exhaustive mod 9 cubics") {
    const long p = 3;
    int checked = 0;
    for (long f0 = 0; f0 < 9; ++f0)
        for (long f1 = 0; f1 < 9; ++f1)
            for (long f2 = 0; f2 < 9; ++f2)
                for (long f3 = 0; f3 < 9; ++f3) {
                    BinaryForm F(3, {Int(f0), Int(f1), Int(f2), Int(f3)});
                    if (!F.is_primitive_at(Int(p))) continue;
                    // thin the sweep here; the acceptance suite runs it in full
                    if ((f0 * 31 + f1 * 17 + f2 * 5 + f3) % 11 != 0) continue;
                    bool dedekind = is_maximal_at(F, Int(p));
                    bool oracle = superlattice_oracle(F, p);
                    CHECK(dedekind == oracle);
                    ++checked;
                }
    CHECK(checked > 400);
}

TEST_CASE("local classification flags") {
    LocalClass simon7 = classify_local(kSimon, Int(7));
    CHECK(simon7.primitive);
    CHECK(simon7.maximal);
    CHECK(simon7.e1 == 1);
    CHECK(simon7.nu == 1);
    CHECK_FALSE(simon7.squareful);

    // squareful cubic: F == z x^2 mod 7 with f_0 = 7
    BinaryForm sq(3, {Int(7), Int(1), Int(7), Int(7)});
    LocalClass c = classify_local(sq, Int(7));
    CHECK(c.squareful);
    CHECK(c.e1 == 1);

    // evenly ramified quartic: (x^2 + x z + z^2)^2 mod 5
    BinaryForm ev(4, {Int(1), Int(2), Int(3), Int(2), Int(1)});
    LocalClass e = classify_local(ev, Int(5));
    CHECK(e.evenly_ramified);
    CHECK(e.square_mod_p);

    // min(nu, e1) = 1 for maximal forms with nu >= 1 (spot checks)
    Rng rng(73);
    for (int t = 0; t < 200; ++t) {
        std::vector<Int> c3(4);
        c3[0] = Int(3) * random_int(rng, 1, 20);
        for (int i = 1; i < 4; ++i) c3[static_cast<std::size_t>(i)] = random_int(rng, -20, 20);
        BinaryForm F(3, c3);
        if (!F.is_primitive_at(Int(3))) continue;
        LocalClass lc = classify_local(F, Int(3));
        if (lc.maximal) CHECK(std::min(lc.nu, static_cast<long>(lc.e1)) == 1);
    }
}

TEST_CASE("distinguished-orbit existence and the global criterion") {
    // p not dividing f_0: always true
    CHECK(has_distinguished_local(kSimon, Int(5)) == std::optional<bool>(true));
    // Simon form at 7: maximal, nu odd, not squareful
    CHECK(has_distinguished_local(kSimon, Int(7)) == std::optional<bool>(false));
    // squareful maximal example
    BinaryForm sq(3, {Int(7), Int(1), Int(7), Int(7)});
    if (classify_local(sq, Int(7)).maximal)
        CHECK(has_distinguished_local(sq, Int(7)) == std::optional<bool>(true));

    CHECK(global_sqrt_criterion(BinaryForm(3, {Int(1), Int(2), Int(-3), Int(5)})) ==
          SqrtCriterion::guaranteed);
    CHECK(global_sqrt_criterion(kSimon) == SqrtCriterion::obstructed);
}
