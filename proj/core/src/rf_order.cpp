#include "binic/rf_order.hpp"

#include <cassert>

namespace binic {

RfOrder::RfOrder(BinaryForm F) : form_(std::move(F)) {
    if (!form_.integral_mode()) throw invalid_input("RfOrder needs an integral form");
    if (form_.leading() == 0) throw invalid_input("RfOrder needs f_0 != 0");
    if (!is_separable(form_)) throw invalid_input("RfOrder needs a separable form");
    const int n = form_.degree();

    // zeta_i zeta_j = sum_{k=j+1}^{min(i+j,n)} f_{i+j-k} zeta_k
    //               - sum_{k=max(i+j-n,1)}^{i} f_{i+j-k} zeta_k,
    // with zeta_n = -f_n feeding the constant slot.
    table_.assign(static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1), {});
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) {
            std::vector<Rat> c(static_cast<std::size_t>(n), Rat(0));
            for (int k = j + 1; k <= std::min(i + j, n); ++k) {
                const Int& f = form_.coeff(i + j - k);
                if (k == n)
                    c[0] += Rat(-f * form_.coeff(n));
                else
                    c[static_cast<std::size_t>(k)] += Rat(f);
            }
            for (int k = std::max(i + j - n, 1); k <= i; ++k)
                c[static_cast<std::size_t>(k)] -= Rat(form_.coeff(i + j - k));
            table_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n - 1) +
                   static_cast<std::size_t>(j - 1)] = c;
            table_[static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(n - 1) +
                   static_cast<std::size_t>(i - 1)] = std::move(c);
        }

    zeta_in_theta_ = MatQ(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    zeta_in_theta_.at(0, 0) = 1;
    for (int i = 1; i < n; ++i)
        for (int e = 1; e <= i; ++e)
            zeta_in_theta_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(e)) =
                Rat(form_.coeff(i - e));
    theta_powers_ = zeta_in_theta_.inverse();

    minpoly_ = form_.dehomogenized();
}

const std::vector<Rat>& RfOrder::zeta_product(int i, int j) const {
    assert(i >= 1 && j >= 1 && i < n() && j < n());
    return table_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n() - 1) +
                  static_cast<std::size_t>(j - 1)];
}

std::vector<Int> RfOrder::p_poly(int i) const {
    std::vector<Int> c(static_cast<std::size_t>(i) + 1, Int(0));
    for (int e = 1; e <= i; ++e) c[static_cast<std::size_t>(e)] = form_.coeff(i - e);
    return c;
}

AlgebraElement RfOrder::one() const { return from_int(Rat(1)); }

AlgebraElement RfOrder::zeta(int i) const {
    AlgebraElement u{std::vector<Rat>(static_cast<std::size_t>(n()), Rat(0))};
    u.coords[static_cast<std::size_t>(i)] = 1;
    return u;
}

AlgebraElement RfOrder::theta() const {
    AlgebraElement u{std::vector<Rat>(static_cast<std::size_t>(n()), Rat(0))};
    u.coords[1] = Rat(1, f0());
    u.coords[1].canonicalize();
    return u;
}

AlgebraElement RfOrder::from_int(const Rat& a) const {
    AlgebraElement u{std::vector<Rat>(static_cast<std::size_t>(n()), Rat(0))};
    u.coords[0] = a;
    return u;
}

AlgebraElement RfOrder::theta_power(int j) const {
    return AlgebraElement{theta_powers_.row(static_cast<std::size_t>(j))};
}

AlgebraElement RfOrder::add(const AlgebraElement& u, const AlgebraElement& v) const {
    AlgebraElement r = u;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += v.coords[i];
    return r;
}

AlgebraElement RfOrder::sub(const AlgebraElement& u, const AlgebraElement& v) const {
    AlgebraElement r = u;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= v.coords[i];
    return r;
}

AlgebraElement RfOrder::neg(const AlgebraElement& u) const {
    AlgebraElement r = u;
    for (Rat& v : r.coords) v = -v;
    return r;
}

AlgebraElement RfOrder::scale(const Rat& a, const AlgebraElement& u) const {
    AlgebraElement r = u;
    for (Rat& v : r.coords) v *= a;
    return r;
}

AlgebraElement RfOrder::mul(const AlgebraElement& u, const AlgebraElement& v) const {
    const std::size_t n = static_cast<std::size_t>(this->n());
    AlgebraElement r{std::vector<Rat>(n, Rat(0))};
    // constant parts
    if (u.coords[0] != 0)
        for (std::size_t k = 0; k < n; ++k) r.coords[k] += u.coords[0] * v.coords[k];
    if (v.coords[0] != 0)
        for (std::size_t k = 1; k < n; ++k) r.coords[k] += v.coords[0] * u.coords[k];
    for (std::size_t i = 1; i < n; ++i) {
        if (u.coords[i] == 0) continue;
        for (std::size_t j = 1; j < n; ++j) {
            if (v.coords[j] == 0) continue;
            Rat c = u.coords[i] * v.coords[j];
            const std::vector<Rat>& prod =
                zeta_product(static_cast<int>(i), static_cast<int>(j));
            for (std::size_t k = 0; k < n; ++k)
                if (prod[k] != 0) r.coords[k] += c * prod[k];
        }
    }
    return r;
}

MatQ RfOrder::mult_matrix(const AlgebraElement& u) const {
    const std::size_t n = static_cast<std::size_t>(this->n());
    MatQ M(n, n);
    M.set_row(0, u.coords);
    for (std::size_t j = 1; j < n; ++j)
        M.set_row(j, mul(u, zeta(static_cast<int>(j))).coords);
    return M;
}

Rat RfOrder::norm(const AlgebraElement& u) const { return mult_matrix(u).det(); }

Rat RfOrder::trace(const AlgebraElement& u) const {
    MatQ M = mult_matrix(u);
    Rat t = 0;
    for (std::size_t i = 0; i < M.rows(); ++i) t += M.at(i, i);
    return t;
}

AlgebraElement RfOrder::inverse(const AlgebraElement& u) const {
    MatQ M = mult_matrix(u);
    std::vector<Rat> e(static_cast<std::size_t>(n()), Rat(0));
    e[0] = 1;
    // x * M = e  with  x = coords of u^{-1}
    return AlgebraElement{solve_left(M, e)};
}

AlgebraElement RfOrder::div(const AlgebraElement& u, const AlgebraElement& v) const {
    return mul(u, inverse(v));
}

std::vector<Rat> RfOrder::to_theta_coords(const AlgebraElement& u) const {
    return mul_row(u.coords, zeta_in_theta_);
}

AlgebraElement RfOrder::from_theta_coords(const std::vector<Rat>& t) const {
    std::vector<Rat> padded = t;
    padded.resize(static_cast<std::size_t>(n()), Rat(0));
    return AlgebraElement{mul_row(padded, theta_powers_)};
}

AlgebraElement RfOrder::mul_via_polynomials(const AlgebraElement& u,
                                            const AlgebraElement& v) const {
    PolyQ pu(to_theta_coords(u)), pv(to_theta_coords(v));
    PolyQ prod = (pu * pv).divmod(minpoly_).second;
    std::vector<Rat> t = prod.coeffs();
    t.resize(static_cast<std::size_t>(n()), Rat(0));
    return from_theta_coords(t);
}

AlgebraElement transport_m1(const RfOrder& from, const RfOrder& to, const Int& s,
                            const AlgebraElement& u) {
    const int n = from.n();
    if (to.n() != n) throw invalid_input("transport between different degrees");
    // theta = theta' + s: expand each theta^j by the binomial theorem
    std::vector<Rat> t = from.to_theta_coords(u);
    std::vector<Rat> tp(static_cast<std::size_t>(n), Rat(0));
    for (int j = 0; j < n; ++j) {
        if (t[static_cast<std::size_t>(j)] == 0) continue;
        Rat sp = 1;
        for (int e = j; e >= 0; --e) {
            tp[static_cast<std::size_t>(e)] +=
                t[static_cast<std::size_t>(j)] *
                Rat(binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(e))) * sp;
            sp *= Rat(s);
        }
    }
    return to.from_theta_coords(tp);
}

}  // namespace binic
