#include "binic/based_ideal.hpp"

#include <cassert>

namespace binic {

namespace {

// reduce a stack of rational generator rows to a canonical full-rank basis
MatQ reduce_rows(const MatQ& rows, std::size_t n) {
    Int den = rows.denominator_lcm();
    MatZ cleared = rows.numerator(den);
    MatZ h = cleared.hnf();
    if (h.rows() != n) throw invalid_input("generators do not span a full lattice");
    return h.to_q(den);
}

}  // namespace

BasedIdeal::BasedIdeal(const RfOrder& ord, MatQ basis) : basis_(std::move(basis)) {
    const std::size_t n = static_cast<std::size_t>(ord.n());
    if (basis_.rows() != n || basis_.cols() != n)
        throw invalid_input("ideal basis must be n x n");
    norm_ = basis_.det();
    if (norm_ == 0) throw invalid_input("ideal basis must be invertible");
}

bool BasedIdeal::contains(const RfOrder& ord, const AlgebraElement& u) const {
    (void)ord;
    std::vector<Rat> x = solve_left(basis_, u.coords);
    for (const Rat& v : x)
        if (!is_integer(v)) return false;
    return true;
}

bool BasedIdeal::is_module(const RfOrder& ord) const {
    for (int i = 1; i < ord.n(); ++i) {
        AlgebraElement z = ord.zeta(i);
        for (std::size_t r = 0; r < basis_.rows(); ++r)
            if (!contains(ord, ord.mul(z, element(r)))) return false;
    }
    return true;
}

bool BasedIdeal::same_lattice(const BasedIdeal& other) const {
    Int d1 = basis_.denominator_lcm();
    Int d2 = other.basis_.denominator_lcm();
    Int d;
    mpz_lcm(d.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
    return basis_.numerator(d).hnf() == other.basis_.numerator(d).hnf();
}

BasedIdeal BasedIdeal::canonicalized(const RfOrder& ord) const {
    Int den = basis_.denominator_lcm();
    MatZ h = basis_.numerator(den).hnf();
    return BasedIdeal(ord, h.to_q(den));
}

BasedIdeal unit_ideal(const RfOrder& ord) {
    return BasedIdeal(ord, MatQ::identity(static_cast<std::size_t>(ord.n())));
}

BasedIdeal power_ideal_basis(const RfOrder& ord, int k) {
    const int n = ord.n();
    if (k < 0 || k > n - 1) throw invalid_input("power ideal index out of range");
    MatQ B(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 0; j <= k; ++j)
        B.set_row(static_cast<std::size_t>(j), ord.theta_powers().row(static_cast<std::size_t>(j)));
    for (int j = k + 1; j < n; ++j) B.at(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = 1;
    return BasedIdeal(ord, std::move(B));
}

BasedIdeal ideal_product(const RfOrder& ord, const BasedIdeal& I, const BasedIdeal& J) {
    const std::size_t n = static_cast<std::size_t>(ord.n());
    MatQ rows(n * n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            rows.set_row(a * n + b, ord.mul(I.element(a), J.element(b)).coords);
    return BasedIdeal(ord, reduce_rows(rows, n));
}

BasedIdeal principal_ideal(const RfOrder& ord, const AlgebraElement& alpha) {
    return BasedIdeal(ord, ord.mult_matrix(alpha));
}

BasedIdeal scale_ideal(const RfOrder& ord, const AlgebraElement& kappa, const BasedIdeal& I) {
    const std::size_t n = static_cast<std::size_t>(ord.n());
    MatQ B(n, n);
    for (std::size_t r = 0; r < n; ++r) B.set_row(r, ord.mul(kappa, I.element(r)).coords);
    return BasedIdeal(ord, std::move(B));
}

BasedIdeal colon_ideal(const RfOrder& ord, const BasedIdeal& J, const BasedIdeal& I) {
    const std::size_t n = static_cast<std::size_t>(ord.n());
    // find gamma in I that is invertible in K_F
    AlgebraElement gamma;
    bool found = false;
    for (std::size_t r = 0; r < n && !found; ++r) {
        gamma = I.element(r);
        if (ord.norm(gamma) != 0) found = true;
    }
    if (!found) {
        // some small combination of rows is a nonzerodivisor
        for (long c = 1; c <= 8 && !found; ++c) {
            AlgebraElement s = I.element(0);
            for (std::size_t r = 1; r < n; ++r)
                s = ord.add(s, ord.scale(Rat(Int(c) + Int(r)), I.element(r)));
            if (ord.norm(s) != 0) {
                gamma = s;
                found = true;
            }
        }
    }
    if (!found) throw invalid_input("ideal has no invertible element");

    // colon(J:I) <= gamma^{-1} J; write candidates as z * W, z in Z^n
    AlgebraElement ginv = ord.inverse(gamma);
    MatQ W(n, n);
    for (std::size_t r = 0; r < n; ++r) W.set_row(r, ord.mul(ginv, J.element(r)).coords);

    MatQ BJinv = J.basis().inverse();
    // stack conditions z * (W * M_{b_s} * BJ^{-1}) integral over all basis
    // rows b_s of I
    MatQ C(n, n * n);
    for (std::size_t s = 0; s < n; ++s) {
        MatQ Cs = W * ord.mult_matrix(I.element(s)) * BJinv;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) C.at(i, s * n + j) = Cs.at(i, j);
    }
    Int d = C.denominator_lcm();
    MatZ D = C.numerator(d);  // need z * D = 0 (mod d)
    // kernel of [[D],[d I]] projected to the first n coordinates
    MatZ stacked(n + n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n * n; ++j) stacked.at(i, j) = D.at(i, j);
    for (std::size_t i = 0; i < n * n; ++i) stacked.at(n + i, i) = d;
    MatZ ker = stacked.left_kernel();
    MatZ zp(ker.rows(), n);
    for (std::size_t i = 0; i < ker.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) zp.at(i, j) = ker.at(i, j);
    MatZ L = zp.hnf();
    if (L.rows() != n) throw invalid_input("colon ideal is not full rank");
    // basis = L * W
    MatQ out = L.to_q(1) * W;
    return BasedIdeal(ord, reduce_rows(out, n));
}

bool is_invertible(const RfOrder& ord, const BasedIdeal& I) {
    BasedIdeal inv = colon_ideal(ord, unit_ideal(ord), I);
    return ideal_product(ord, I, inv).same_lattice(unit_ideal(ord));
}

}  // namespace binic
