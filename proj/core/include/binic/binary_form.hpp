#pragma once

#include "binic/numeric.hpp"
#include "binic/poly.hpp"

#include <string>
#include <vector>

namespace binic {

/// Integral binary form of degree n:
///   F(x, z) = f_0 x^n + f_1 x^{n-1} z + ... + f_n z^n.
/// In residue mode a positive modulus is recorded and coefficients are kept
/// reduced into [0, modulus).
class BinaryForm {
  public:
    BinaryForm() = default;
    BinaryForm(int n, std::vector<Int> coeffs, Int modulus = 0);

    int degree() const { return n_; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const Int& leading() const { return c_[0]; }
    const Int& modulus() const { return mod_; }
    bool integral_mode() const { return mod_ == 0; }

    bool operator==(const BinaryForm& o) const = default;

    /// F(x, 1) as a rational polynomial (ascending coefficients).
    PolyQ dehomogenized() const;

    bool is_primitive() const;
    bool is_primitive_at(const Int& p) const;

    std::string to_string() const;

  private:
    int n_ = 0;
    std::vector<Int> c_;
    Int mod_ = 0;
};

/// Discriminant of a degree-n form, n >= 2. Vanishes exactly on inseparable
/// forms; degenerate leading coefficients are allowed.
Int discriminant(const BinaryForm& F);

inline bool is_separable(const BinaryForm& F) { return discriminant(F) != 0; }

/// The monic form (1/f_0) F(x, f_0 z); requires f_0 != 0.
BinaryForm monicize(const BinaryForm& F);

/// Substitution x -> x + d*s*z, z -> z. Leaves f_0 and the discriminant fixed.
BinaryForm m1_act(const BinaryForm& F, const Int& s, const Int& d = 1);

/// The translate whose x^{n-1}z-coefficient lies in [0, n*f_0); requires
/// f_0 > 0. Returns the translate and that coefficient.
std::pair<BinaryForm, Int> canonical_rep(const BinaryForm& F);

struct Signature {
    int r1 = 0;  // real irreducible linear factors
    int r2 = 0;  // real irreducible quadratic factors
    bool operator==(const Signature&) const = default;
};

/// Counts real roots of F(x,1) by an exact Sturm sequence; requires F
/// separable with f_0 != 0.
Signature real_signature(const BinaryForm& F);

/// Exact height data: the absolute coefficients |~f_i| (i = 2..n) of the
/// translate of the monicized form with vanishing x^{n-1}z-coefficient.
/// H(F) = max_i |~f_i|^{1/i}; all comparisons are exact on rationals.
class Height {
  public:
    explicit Height(const BinaryForm& F);

    int degree() const { return static_cast<int>(tails_.size()) + 1; }
    /// Index i* achieving the max (smallest such index) and |~f_{i*}|.
    int arg() const { return arg_; }
    const Rat& value() const { return tails_[static_cast<std::size_t>(arg_ - 2)]; }
    const std::vector<Rat>& tail_coeffs() const { return tails_; }

    /// H(F) < X, decided as |~f_i| < X^i for every i.
    bool less_than(const Rat& bound) const;

    static int compare(const Height& a, const Height& b);  // -1 / 0 / +1

  private:
    std::vector<Rat> tails_;  // |~f_2|, ..., |~f_n|
    int arg_ = 2;
};

}  // namespace binic
