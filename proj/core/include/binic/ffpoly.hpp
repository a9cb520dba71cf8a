#pragma once

#include "binic/numeric.hpp"

#include <vector>

namespace binic {

/// Univariate polynomial over F_p, ascending coefficients in [0, p).
struct FpPoly {
    long p = 0;
    std::vector<long> c;

    FpPoly() = default;
    FpPoly(long prime, std::vector<long> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    long leading() const { return c.empty() ? 0 : c.back(); }
    bool is_monic() const { return leading() == 1; }
    bool operator==(const FpPoly&) const = default;

    void trim();
};

FpPoly fp_constant(long p, long a);
FpPoly fp_x(long p);
FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic gcd
FpPoly fp_monic(const FpPoly& a);
FpPoly fp_derivative(const FpPoly& a);
FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& mod);
long fp_eval(const FpPoly& a, long x);

/// Extended Euclid: returns (g, u, v) monic g with u a + v b = g.
std::tuple<FpPoly, FpPoly, FpPoly> fp_xgcd(const FpPoly& a, const FpPoly& b);

struct FpFactor {
    FpPoly poly;  // monic irreducible
    int multiplicity = 0;
};

/// Full factorization of a nonzero polynomial: unit * product of monic
/// irreducible powers. Deterministic given the seed (equal-degree splitting
/// draws from a seeded generator).
struct FpFactorization {
    long unit = 1;
    std::vector<FpFactor> factors;
};
FpFactorization fp_factor(const FpPoly& f, std::uint64_t seed = 0x5eedULL);

bool fp_is_irreducible(const FpPoly& f);

/// All monic irreducibles of given degree, lexicographic by coefficients;
/// cached per (p, degree). Intended for small p^degree.
const std::vector<FpPoly>& fp_irreducibles(long p, int degree);

/// Is f a perfect square in F_p[x] (up to leading unit: all factor
/// multiplicities even)?
bool fp_even_multiplicities(const FpPoly& f, std::uint64_t seed = 0x5eedULL);

}  // namespace binic
