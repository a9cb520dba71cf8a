#include "binic/sym_pair.hpp"

namespace binic {

bool SymPair::symmetric() const {
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows()) return false;
    return A == A.transposed() && B == B.transposed();
}

BinaryForm det_form(const SymPair& P) {
    const int n = P.n();
    // g(t) = det(t A + B) has degree <= n; interpolate at t = 0..n
    std::vector<Rat> ys;
    for (int t = 0; t <= n; ++t) {
        MatZ M(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < M.rows(); ++i)
            for (std::size_t j = 0; j < M.cols(); ++j)
                M.at(i, j) = Int(t) * P.A.at(i, j) + P.B.at(i, j);
        ys.push_back(Rat(M.det()));
    }
    // Lagrange interpolation on nodes 0..n
    std::vector<Rat> coeff(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
        // basis polynomial prod_{j != i} (t - j)/(i - j)
        std::vector<Rat> basis{Rat(1)};
        Rat denom = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k] += basis[k] * Rat(-j);
                next[k + 1] += basis[k];
            }
            basis = std::move(next);
            denom *= Rat(i - j);
        }
        Rat w = ys[static_cast<std::size_t>(i)] / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) coeff[k] += w * basis[k];
    }
    // det(xA + zB) = z^n g(x/z): coefficient of x^{n-i} z^i is coeff[n-i]
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const Rat& v = coeff[static_cast<std::size_t>(n - i)];
        if (!is_integer(v)) throw std::logic_error("pencil determinant not integral");
        c[static_cast<std::size_t>(i)] = v.get_num();
    }
    return BinaryForm(n, std::move(c));
}

BinaryForm inv_form(const SymPair& P) {
    BinaryForm d = det_form(P);
    if ((P.n() / 2) % 2 == 0) return d;
    std::vector<Int> c = d.coeffs();
    for (Int& v : c) v = -v;
    return BinaryForm(d.degree(), std::move(c));
}

}  // namespace binic
