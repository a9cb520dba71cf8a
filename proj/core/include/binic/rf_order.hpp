#pragma once

#include "binic/binary_form.hpp"
#include "binic/matrix.hpp"
#include "binic/numeric.hpp"
#include "binic/poly.hpp"

#include <vector>

namespace binic {

/// Element of K_F = Q[x]/(F(x,1)) in the basis (1, zeta_1, ..., zeta_{n-1}).
struct AlgebraElement {
    std::vector<Rat> coords;

    bool operator==(const AlgebraElement&) const = default;
    bool is_zero() const {
        for (const Rat& v : coords)
            if (v != 0) return false;
        return true;
    }
    bool is_integral() const {
        for (const Rat& v : coords)
            if (!is_integer(v)) return false;
        return true;
    }
};

/// The rank-n ring attached to a separable integral binary form, carried by
/// its structure constants over the basis 1, zeta_1, ..., zeta_{n-1} where
/// zeta_i = p_i(theta), p_i(t) = sum_{j<i} f_j t^{i-j}.
class RfOrder {
  public:
    explicit RfOrder(BinaryForm F);

    const BinaryForm& form() const { return form_; }
    int n() const { return form_.degree(); }
    const Int& f0() const { return form_.leading(); }

    /// Structure constants: product zeta_i zeta_j (1 <= i, j <= n-1) in the
    /// zeta-basis coordinates (index 0 is the constant slot).
    const std::vector<Rat>& zeta_product(int i, int j) const;

    /// Coefficient vector of p_i (ascending, p_i(0) = 0), i in 1..n-1.
    std::vector<Int> p_poly(int i) const;

    /// Row j = coordinates of theta^j in the zeta-basis.
    const MatQ& theta_powers() const { return theta_powers_; }
    /// Row i = coordinates of zeta_i in the theta-power basis (integral).
    const MatQ& zeta_in_theta() const { return zeta_in_theta_; }

    AlgebraElement one() const;
    AlgebraElement zeta(int i) const;  // i = 0 gives 1
    AlgebraElement theta() const;
    AlgebraElement from_int(const Rat& a) const;
    AlgebraElement theta_power(int j) const;

    AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v) const;
    AlgebraElement sub(const AlgebraElement& u, const AlgebraElement& v) const;
    AlgebraElement neg(const AlgebraElement& u) const;
    AlgebraElement scale(const Rat& a, const AlgebraElement& u) const;
    AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v) const;

    /// Matrix of multiplication by u: row j = coords of u * basis_j, so that
    /// coords(u*v) = coords(v) * M(u).
    MatQ mult_matrix(const AlgebraElement& u) const;

    Rat norm(const AlgebraElement& u) const;
    Rat trace(const AlgebraElement& u) const;
    /// Multiplicative inverse; throws invalid_input on zero divisors.
    AlgebraElement inverse(const AlgebraElement& u) const;
    AlgebraElement div(const AlgebraElement& u, const AlgebraElement& v) const;

    /// theta-power coordinates of u (the polynomial representative mod
    /// F(x,1)), and back.
    std::vector<Rat> to_theta_coords(const AlgebraElement& u) const;
    AlgebraElement from_theta_coords(const std::vector<Rat>& t) const;

    /// Oracle-grade product: multiply polynomial representatives modulo
    /// F(x,1) and convert back. Used to cross-check the structure constants.
    AlgebraElement mul_via_polynomials(const AlgebraElement& u, const AlgebraElement& v) const;

  private:
    BinaryForm form_;
    std::vector<std::vector<Rat>> table_;  // (n-1)x(n-1) products, flattened
    MatQ zeta_in_theta_;                   // Z: rows zeta_i over theta-powers
    MatQ theta_powers_;                    // Z^{-1}
    PolyQ minpoly_;                        // F(x,1)
};

/// Transport of coordinates between the zeta-bases of F and of its
/// M_1-translate F' = F(x + s z, z); the underlying identification of
/// K_F with K_{F'} sends theta to theta' + s.
AlgebraElement transport_m1(const RfOrder& from, const RfOrder& to, const Int& s,
                            const AlgebraElement& u);

}  // namespace binic
