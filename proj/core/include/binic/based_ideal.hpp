#pragma once

#include "binic/matrix.hpp"
#include "binic/rf_order.hpp"

namespace binic {

/// Fractional R_F-ideal with a chosen basis: row i of `basis` holds the
/// zeta-coordinates of the i-th basis element. The (signed) norm is the
/// determinant of the basis matrix; orientation is part of the data.
class BasedIdeal {
  public:
    BasedIdeal() = default;
    BasedIdeal(const RfOrder& ord, MatQ basis);

    const MatQ& basis() const { return basis_; }
    const Rat& norm() const { return norm_; }

    AlgebraElement element(std::size_t i) const { return AlgebraElement{basis_.row(i)}; }

    /// Exact lattice membership.
    bool contains(const RfOrder& ord, const AlgebraElement& u) const;

    /// Is the row span closed under multiplication by every zeta_i?
    bool is_module(const RfOrder& ord) const;

    /// Same lattice (row span over Z), ignoring basis and orientation.
    bool same_lattice(const BasedIdeal& other) const;

    /// Canonical basis: integer HNF of the cleared matrix divided back by
    /// the denominator. Norm becomes |norm|.
    BasedIdeal canonicalized(const RfOrder& ord) const;

    bool operator==(const BasedIdeal& o) const = default;

  private:
    MatQ basis_;
    Rat norm_;
};

/// The unit ideal R_F with its zeta-basis.
BasedIdeal unit_ideal(const RfOrder& ord);

/// I_F^k with basis (1, theta, ..., theta^k, zeta_{k+1}, ..., zeta_{n-1});
/// its norm is f_0^{-k}. Requires 0 <= k <= n-1.
BasedIdeal power_ideal_basis(const RfOrder& ord, int k);

/// Module generated by all pairwise products of basis elements, reduced to
/// a canonical Hermite basis.
BasedIdeal ideal_product(const RfOrder& ord, const BasedIdeal& I, const BasedIdeal& J);

/// Principal based ideal alpha * R_F (rows = alpha * zeta-basis).
BasedIdeal principal_ideal(const RfOrder& ord, const AlgebraElement& alpha);

/// Scale every basis element by kappa.
BasedIdeal scale_ideal(const RfOrder& ord, const AlgebraElement& kappa, const BasedIdeal& I);

/// Colon ideal (J : I) = { x in K_F : x I <= J }.
BasedIdeal colon_ideal(const RfOrder& ord, const BasedIdeal& J, const BasedIdeal& I);

/// I * (R_F : I) equals R_F.
bool is_invertible(const RfOrder& ord, const BasedIdeal& I);

inline Rat ideal_norm(const RfOrder&, const BasedIdeal& I) { return I.norm(); }

}  // namespace binic
