#pragma once

#include "binic/based_ideal.hpp"
#include "binic/rf_order.hpp"
#include "binic/sym_pair.hpp"

#include <optional>

namespace binic {

/// Thrown by construct_pair when the bilinear values are not integral,
/// i.e. the input pair (I, alpha) is not a valid datum over Z.
struct datum_not_integral : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The two coordinate functionals on K_F defined on the basis
/// (1, theta, ..., theta^{n-2}, zeta_{n-1}): pi_{n-2} reads the
/// theta^{n-2}-coordinate and pi_{n-1} reads minus the
/// zeta_{n-1}-coordinate. Stored as covectors on the zeta-basis.
struct PiFunctionals {
    std::vector<Rat> pi_nm2;
    std::vector<Rat> pi_nm1;

    Rat nm2(const AlgebraElement& u) const;
    Rat nm1(const AlgebraElement& u) const;
};

PiFunctionals pi_functionals(const RfOrder& ord);

/// A based fractional ideal I and invertible alpha with
/// I^2 <= alpha I_F^{n-2} and N(I)^2 = r N(alpha) N(I_F^{n-2}), r = +-1.
struct SqrtDatum {
    BasedIdeal ideal;
    AlgebraElement alpha;
    Rat r;
};

/// Validates the containment and norm conditions and fills in r; throws
/// invalid_input when (I, alpha) is not a square-root datum.
SqrtDatum make_datum(const RfOrder& ord, BasedIdeal ideal, AlgebraElement alpha);

struct ConstructedPair {
    SymPair pair;
    Int det_a;        // determinant of A; always +-1
    int epsilon;      // realized sign: det A = epsilon * (-1)^{floor(n/2)} * r
};

/// A_{ij} = pi_{n-1}(alpha^{-1} b_i b_j), B_{ij} = pi_{n-2}(alpha^{-1} b_i b_j)
/// over the rows b_i of the ideal basis. Enforces
/// det(x A + z B) = det(A) * F_mon exactly and |det A| = 1.
ConstructedPair construct_pair(const RfOrder& ord, const SqrtDatum& datum);

/// The integrality conditions cutting out the image of the construction:
/// p_i((1/f_0)(-A^{-1}B)) integral for i = 1..n-1.
bool check_conditions(const SymPair& P, const BinaryForm& F);

/// Variant taking only the leading coefficient: reconstructs F from the
/// pencil determinant; false if no integral form with that leading
/// coefficient matches.
bool check_conditions(const SymPair& P, const Int& f0);

/// Converse construction: from a pair with det(xA+zB) = det(A) F_mon and
/// the integrality conditions, rebuild a datum (I, alpha, r). Cyclic-vector
/// search order: standard basis, then {-1,0,1} vectors, then seeded random
/// retries (cap 1000).
SqrtDatum recover_datum(const RfOrder& ord, const SymPair& P, std::uint64_t seed = 0x5eedULL);

/// Equivalence of data: exists kappa with kappa I_2 = I_1 as lattices and
/// alpha_1 = kappa^2 alpha_2. Bounded search over small coordinate boxes in
/// I_1 * I_2^{-1}.
bool equivalent_data(const RfOrder& ord, const SqrtDatum& a, const SqrtDatum& b,
                     long box = 3);

/// Stabilizer order of an orbit arising from an invertible ideal when R_F
/// is maximal with m irreducible factors over Q: 2^{m-1} for odd n (norm-1
/// condition), 2^m for even n. Throws invalid_input on non-maximal orders.
Int stabilizer_size_maximal(const BinaryForm& F);

}  // namespace binic
