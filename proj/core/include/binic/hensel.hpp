#pragma once

#include "binic/ffpoly.hpp"
#include "binic/numeric.hpp"

#include <vector>

namespace binic {

/// Polynomials over Z/m, ascending coefficients reduced into [0, m).
using ZmPoly = std::vector<Int>;

ZmPoly zm_reduce(const std::vector<Int>& c, const Int& m);
ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& m);
ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const Int& m);
/// Remainder of division by a monic divisor.
ZmPoly zm_rem_monic(const ZmPoly& a, const ZmPoly& monic, const Int& m);
FpPoly zm_to_fp(const ZmPoly& a, long p);
ZmPoly fp_to_zm(const FpPoly& a);

/// Given f = g h (mod p) with gcd(gbar, hbar) = 1 and hbar monic, lift to
/// f = G H (mod p^k) with H monic of the same degree as hbar and
/// deg G <= deg f - deg H (formal degree; leading coefficients may be
/// divisible by p). Coefficients of f beyond g h mod p are absorbed into G.
std::pair<ZmPoly, ZmPoly> hensel_lift_pair(const std::vector<Int>& f, const FpPoly& gbar,
                                           const FpPoly& hbar, long p, int k);

/// Lift f = prod h_i (mod p) to mod p^k; f and the h_i monic, the h_i
/// pairwise coprime mod p.
std::vector<ZmPoly> hensel_lift_monic(const std::vector<Int>& f,
                                      const std::vector<FpPoly>& hbars, long p, int k);

}  // namespace binic
