#pragma once

#include "binic/numeric.hpp"

#include <vector>

namespace binic {

/// Univariate polynomial over Q, coefficients ascending (c[0] + c[1]x + ...).
class PolyQ {
  public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
    static PolyQ x();
    static PolyQ constant(const Rat& a);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator-() const;
    PolyQ scaled(const Rat& a) const;
    bool operator==(const PolyQ& o) const = default;

    PolyQ derivative() const;
    Rat eval(const Rat& t) const;

    /// Quotient and remainder of Euclidean division.
    std::pair<PolyQ, PolyQ> divmod(const PolyQ& d) const;

    PolyQ monic() const;

  private:
    void trim();
    std::vector<Rat> c_;
};

PolyQ gcd(PolyQ a, PolyQ b);

/// Number of distinct real roots, by an exact Sturm sequence.
int sturm_real_roots(const PolyQ& f);

/// Number of distinct real roots in the half-open interval (a, b].
int sturm_real_roots(const PolyQ& f, const Rat& a, const Rat& b);

/// Resultant of a and b taken with formal degrees da >= deg a, db >= deg b
/// (Sylvester determinant of the padded coefficient sequences).
Rat resultant_formal(const PolyQ& a, const PolyQ& b, int da, int db);

}  // namespace binic
