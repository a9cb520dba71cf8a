#include "binic/orbit.hpp"

#include "binic/local_field.hpp"
#include "binic/zx_factor.hpp"

#include <cassert>

namespace binic {

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

Rat PiFunctionals::nm2(const AlgebraElement& u) const { return dot(pi_nm2, u.coords); }
Rat PiFunctionals::nm1(const AlgebraElement& u) const { return dot(pi_nm1, u.coords); }

PiFunctionals pi_functionals(const RfOrder& ord) {
    const std::size_t n = static_cast<std::size_t>(ord.n());
    // rows of P: zeta-coordinates of 1, theta, ..., theta^{n-2}, zeta_{n-1}
    MatQ P(n, n);
    for (std::size_t j = 0; j + 1 < n; ++j) P.set_row(j, ord.theta_powers().row(j));
    P.set_row(n - 1, ord.zeta(static_cast<int>(n) - 1).coords);
    MatQ Pinv = P.inverse();
    PiFunctionals out;
    out.pi_nm2.resize(n);
    out.pi_nm1.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.pi_nm2[k] = Pinv.at(k, n - 2);   // theta^{n-2} coordinate
        out.pi_nm1[k] = -Pinv.at(k, n - 1);  // minus the zeta_{n-1} coordinate
    }
    return out;
}

SqrtDatum make_datum(const RfOrder& ord, BasedIdeal ideal, AlgebraElement alpha) {
    const int n = ord.n();
    if (ord.norm(alpha) == 0) throw invalid_input("alpha must be invertible");
    BasedIdeal target = scale_ideal(ord, alpha, power_ideal_basis(ord, n - 2));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            AlgebraElement prod = ord.mul(ideal.element(static_cast<std::size_t>(i)),
                                          ideal.element(static_cast<std::size_t>(j)));
            if (!target.contains(ord, prod))
                throw invalid_input("I^2 is not contained in alpha I_F^{n-2}");
        }
    Rat nI = ideal.norm();
    Rat r = nI * nI / (ord.norm(alpha) * power_ideal_basis(ord, n - 2).norm());
    if (r != 1 && r != -1)
        throw invalid_input("norm condition fails: N(I)^2 / (N(alpha) N(I_F^{n-2})) not a unit");
    return SqrtDatum{std::move(ideal), std::move(alpha), r};
}

ConstructedPair construct_pair(const RfOrder& ord, const SqrtDatum& datum) {
    const int n = ord.n();
    const std::size_t un = static_cast<std::size_t>(n);
    PiFunctionals pi = pi_functionals(ord);
    AlgebraElement ainv = ord.inverse(datum.alpha);

    MatZ A(un, un), B(un, un);
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = i; j < un; ++j) {
            AlgebraElement prod =
                ord.mul(ainv, ord.mul(datum.ideal.element(i), datum.ideal.element(j)));
            Rat a = pi.nm1(prod), b = pi.nm2(prod);
            if (!is_integer(a) || !is_integer(b))
                throw datum_not_integral("bilinear values are not integral");
            A.at(i, j) = a.get_num();
            A.at(j, i) = a.get_num();
            B.at(i, j) = b.get_num();
            B.at(j, i) = b.get_num();
        }

    SymPair P{std::move(A), std::move(B)};
    Int da = P.A.det();
    if (da != 1 && da != -1) throw std::logic_error("constructed pair has |det A| != 1");
    BinaryForm pencil = det_form(P);
    BinaryForm target = monicize(ord.form());
    std::vector<Int> scaled = target.coeffs();
    for (Int& v : scaled) v *= da;
    if (pencil.coeffs() != scaled)
        throw std::logic_error("pencil determinant does not match det(A) * F_mon");

    // realized sign relative to the antitriangular prediction
    Rat pred = Rat(((n / 2) % 2) ? -1 : 1) * datum.r;
    int eps = (Rat(da) == pred) ? 1 : -1;
    return ConstructedPair{std::move(P), da, eps};
}

bool check_conditions(const SymPair& P, const BinaryForm& F) {
    const int n = P.n();
    if (F.degree() != n) throw invalid_input("degree mismatch");
    Int da = P.A.det();
    if (da != 1 && da != -1) throw invalid_input("check_conditions needs |det A| = 1");
    MatQ Ainv = P.A.to_q(1).inverse();
    MatQ T = (Ainv * P.B.to_q(1)).scaled(Rat(-1, F.leading()));
    // p_1(T) = f_0 T, p_{i+1}(T) = T (p_i(T) + f_i)
    MatQ Pi = T.scaled(Rat(F.leading()));
    for (int i = 1; i <= n - 1; ++i) {
        if (!Pi.is_integral()) return false;
        if (i < n - 1) {
            MatQ shifted = Pi;
            for (std::size_t d = 0; d < shifted.rows(); ++d)
                shifted.at(d, d) += Rat(F.coeff(i));
            Pi = T * shifted;
        }
    }
    return true;
}

bool check_conditions(const SymPair& P, const Int& f0) {
    if (f0 == 0) throw invalid_input("f_0 must be nonzero");
    Int da = P.A.det();
    if (da != 1 && da != -1) throw invalid_input("check_conditions needs |det A| = 1");
    BinaryForm mon = det_form(P);
    const int n = mon.degree();
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    // det(xA+zB) = det(A) * F_mon; recover f_i = (det(A) * mon_i) / f0^{i-1}
    c[0] = f0;
    Int pw = 1;
    for (int i = 1; i <= n; ++i) {
        Int gi = da * mon.coeff(i);
        if (!mpz_divisible_p(gi.get_mpz_t(), pw.get_mpz_t())) return false;
        c[static_cast<std::size_t>(i)] = gi / pw;
        pw *= f0;
    }
    return check_conditions(P, BinaryForm(n, std::move(c)));
}

SqrtDatum recover_datum(const RfOrder& ord, const SymPair& P, std::uint64_t seed) {
    const int n = ord.n();
    const std::size_t un = static_cast<std::size_t>(n);
    Int da = P.A.det();
    if (da != 1 && da != -1) throw invalid_input("recover_datum needs |det A| = 1");
    {
        BinaryForm pencil = det_form(P);
        std::vector<Int> scaled = monicize(ord.form()).coeffs();
        for (Int& v : scaled) v *= da;
        if (pencil.coeffs() != scaled)
            throw invalid_input("pencil determinant is not +-F_mon");
    }
    if (!check_conditions(P, ord.form()))
        throw invalid_input("integrality conditions fail: pair is not in the image");

    // theta acts on column vectors by T = (1/f_0)(-A^{-1} B)
    MatQ Ainv = P.A.to_q(1).inverse();
    MatQ T = (Ainv * P.B.to_q(1)).scaled(Rat(-1, ord.f0()));

    // cyclic vector search: standard basis, then {-1,0,1}^n, then random
    auto try_embed = [&](const std::vector<Rat>& v) -> std::optional<MatQ> {
        MatQ C(un, un);  // columns v, Tv, ..., T^{n-1}v
        std::vector<Rat> w = v;
        for (std::size_t j = 0; j < un; ++j) {
            for (std::size_t i = 0; i < un; ++i) C.at(i, j) = w[i];
            if (j + 1 < un) {
                std::vector<Rat> next(un, Rat(0));
                for (std::size_t i = 0; i < un; ++i)
                    for (std::size_t k = 0; k < un; ++k) next[i] += T.at(i, k) * w[k];
                w = std::move(next);
            }
        }
        if (C.det() == 0) return std::nullopt;
        return C;
    };

    std::optional<MatQ> C;
    for (std::size_t i = 0; i < un && !C; ++i) {
        std::vector<Rat> v(un, Rat(0));
        v[i] = 1;
        C = try_embed(v);
    }
    if (!C) {
        std::vector<long> idx(un, 0);
        while (!C) {
            std::vector<Rat> v(un);
            bool nonzero = false;
            for (std::size_t i = 0; i < un; ++i) {
                v[i] = Rat(idx[i] - 1);
                if (idx[i] != 1) nonzero = true;
            }
            if (nonzero) C = try_embed(v);
            std::size_t i = 0;
            while (i < un && idx[i] == 2) idx[i++] = 0;
            if (i == un) break;
            ++idx[i];
        }
    }
    if (!C) {
        Rng rng(seed);
        for (int t = 0; t < 1000 && !C; ++t) {
            std::vector<Rat> v(un);
            for (auto& x : v) x = Rat(random_int(rng, -3, 3));
            C = try_embed(v);
        }
    }
    if (!C) throw undecided("cyclic vector search exhausted");

    // basis elements: e_i = q_i(T) v  =>  b_i = q_i(theta)
    MatQ Cinv = C->inverse();
    MatQ basis(un, un);
    for (std::size_t i = 0; i < un; ++i) {
        std::vector<Rat> t(un);
        for (std::size_t j = 0; j < un; ++j) t[j] = Cinv.at(j, i);
        basis.set_row(i, ord.from_theta_coords(t).coords);
    }
    BasedIdeal I(ord, std::move(basis));
    if (!I.is_module(ord)) throw std::logic_error("recovered lattice is not an R_F-module");

    // solve pi_{n-1}(alpha' b_i b_j) = A_{ij} for alpha'
    PiFunctionals pi = pi_functionals(ord);
    AlgebraElement alpha_prime;
    {
        // delta_i := alpha' b_i solves pi_{n-1}(delta_i b_j) = A_{ij}
        // combine rows until the multiplier is invertible
        std::vector<AlgebraElement> deltas;
        MatQ Q(un, un);  // Q[k][j] = pi_{n-1}(zeta_k b_j)
        for (std::size_t k = 0; k < un; ++k)
            for (std::size_t j = 0; j < un; ++j)
                Q.at(k, j) = pi.nm1(ord.mul(ord.zeta(static_cast<int>(k)), I.element(j)));
        for (std::size_t i = 0; i < un; ++i) {
            std::vector<Rat> rhs(un);
            for (std::size_t j = 0; j < un; ++j) rhs[j] = Rat(P.A.at(i, j));
            deltas.push_back(AlgebraElement{solve_left(Q, rhs)});
        }
        bool solved = false;
        for (std::size_t i = 0; i < un && !solved; ++i) {
            if (ord.norm(I.element(i)) == 0) continue;
            alpha_prime = ord.div(deltas[i], I.element(i));
            solved = true;
        }
        if (!solved) {
            // small combinations
            for (long c = 1; c <= 16 && !solved; ++c) {
                AlgebraElement num = deltas[0], den = I.element(0);
                for (std::size_t i = 1; i < un; ++i) {
                    Rat w = Rat(Int(c) * Int(static_cast<long>(i)) + 1);
                    num = ord.add(num, ord.scale(w, deltas[i]));
                    den = ord.add(den, ord.scale(w, I.element(i)));
                }
                if (ord.norm(den) != 0) {
                    alpha_prime = ord.div(num, den);
                    solved = true;
                }
            }
        }
        if (!solved) throw undecided("no invertible element among ideal basis combinations");
    }
    if (ord.norm(alpha_prime) == 0) throw std::logic_error("recovered alpha' not invertible");
    AlgebraElement alpha = ord.inverse(alpha_prime);

    SqrtDatum datum = make_datum(ord, I, alpha);
    // internal consistency: the datum reproduces (A, B) with this basis
    ConstructedPair round = construct_pair(ord, datum);
    if (!(round.pair == P)) throw std::logic_error("recovered datum does not reproduce the pair");
    return datum;
}

bool equivalent_data(const RfOrder& ord, const SqrtDatum& a, const SqrtDatum& b, long box) {
    if (a.r != b.r) return false;
    const std::size_t un = static_cast<std::size_t>(ord.n());
    BasedIdeal quotient = ideal_product(ord, a.ideal, colon_ideal(ord, unit_ideal(ord), b.ideal));
    // kappa must lie in I_a * I_b^{-1}; search small coordinate boxes
    std::vector<long> idx(un, 0);
    const long width = 2 * box + 1;
    while (true) {
        AlgebraElement kappa{std::vector<Rat>(un, Rat(0))};
        bool nonzero = false;
        for (std::size_t i = 0; i < un; ++i) {
            long c = idx[i] - box;
            if (c != 0) nonzero = true;
            if (c != 0)
                kappa = ord.add(kappa, ord.scale(Rat(c), quotient.element(i)));
        }
        if (nonzero && ord.mul(ord.mul(kappa, kappa), b.alpha) == a.alpha) {
            if (scale_ideal(ord, kappa, b.ideal).same_lattice(a.ideal)) return true;
        }
        std::size_t i = 0;
        while (i < un && idx[i] == width - 1) idx[i++] = 0;
        if (i == un) break;
        ++idx[i];
    }
    return false;
}

Int stabilizer_size_maximal(const BinaryForm& F) {
    if (!is_maximal_order(F))
        throw invalid_input("order not maximal: use finite-field census or module endomorphisms");
    std::vector<Int> f(F.coeffs().rbegin(), F.coeffs().rend());  // ascending F(x,1)
    int m = zx_irreducible_factor_count(f);
    int e = (F.degree() % 2) ? m - 1 : m;
    return pow_int(Int(2), static_cast<unsigned long>(e));
}

}  // namespace binic
