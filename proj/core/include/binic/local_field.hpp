#pragma once

#include "binic/binary_form.hpp"
#include "binic/ffpoly.hpp"
#include "binic/numeric.hpp"

#include <optional>
#include <vector>

namespace binic {

/// One monic factor of a canonical p-adic factorization: a residue-mode
/// binary form congruent to an irreducible power gbar^multiplicity mod p.
struct LocalFactor {
    BinaryForm lift;   // mod p^k, monic, degree = multiplicity * deg(gbar)
    FpPoly gbar;       // monic irreducible mod p
    int multiplicity;  // e_i
    int degree;        // d_i = deg gbar
};

/// Canonical factorization F = F_1 * prod F_i (mod p^k): F_1 carries the
/// leading coefficient and reduces to unit * z^{e1}; the remaining factors
/// are monic with pairwise coprime irreducible reductions.
struct LocalFactorization {
    Int p;
    int precision = 2;  // k
    Int unit;           // z^{e1}-coefficient of F_1 mod p^k
    int e1 = 0;
    long nu = 0;  // p-adic valuation of f_0
    BinaryForm f1;
    std::vector<LocalFactor> factors;

    /// Re-multiplies the factors; true iff the product is F mod p^k.
    bool reassembles(const BinaryForm& F) const;
};

/// Unique canonical factorization of a form primitive at p, to precision
/// p^k. The factorization itself only requires primitivity at p.
LocalFactorization canonical_factorization(const BinaryForm& F, const Int& p, int k = 2);

enum class Maximality { maximal, non_maximal, imprimitive };

/// Binary-form Dedekind criterion at p: gcd of the radical lift, the
/// cofactor lift, and the difference quotient. Imprimitive input is
/// reported distinctly (the ring is not even Gorenstein there).
Maximality dedekind_maximality(const BinaryForm& F, const Int& p);

inline bool is_maximal_at(const BinaryForm& F, const Int& p) {
    Maximality m = dedekind_maximality(F, p);
    if (m == Maximality::imprimitive)
        throw invalid_input("form imprimitive at p: maximality not defined here");
    return m == Maximality::maximal;
}

struct LocalClass {
    bool primitive = false;
    bool maximal = false;
    bool squareful = false;        // odd degree only
    bool evenly_ramified = false;  // even degree only
    bool square_mod_p = false;     // all multiplicities even and unit a QR
    int e1 = 0;
    long nu = 0;
};

/// Local flags at p; everything is decided modulo p^2.
LocalClass classify_local(const BinaryForm& F, const Int& p);

/// Odd n. Existence of the distinguished local orbit at p:
///  - nu even (including 0): yes;
///  - nu odd: equivalent to squarefulness, valid when R_F is maximal at p.
/// Returns nullopt when the hypotheses fail (nu > 0 but not maximal at p).
std::optional<bool> has_distinguished_local(const BinaryForm& F, const Int& p);

enum class SqrtCriterion { guaranteed, obstructed, unknown };

/// Odd n, primitive separable F: global square-root criterion for the class
/// of the inverse different, from the local data at primes dividing f_0.
SqrtCriterion global_sqrt_criterion(const BinaryForm& F);

/// True when R_F is maximal: checks Dedekind at every prime whose square
/// divides the discriminant. Requires separable primitive F with f_0 != 0.
bool is_maximal_order(const BinaryForm& F);

}  // namespace binic
