#include "binic/local_field.hpp"

#include "binic/hensel.hpp"

#include <algorithm>

namespace binic {

namespace {

// Binary forms over F_p as descending coefficient vectors c_0..c_d
// (c_i on x^{d-i} z^i). The z-valuation is the number of leading zero
// coefficients; the cofactor dehomogenizes to a univariate of full degree.
using FpForm = std::vector<long>;

long to_fp(const Int& v, long p) {
    return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)));
}

FpForm reduce_form(const BinaryForm& F, long p) {
    FpForm c(F.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = to_fp(F.coeffs()[i], p);
    return c;
}

bool form_zero(const FpForm& c) {
    return std::all_of(c.begin(), c.end(), [](long v) { return v == 0; });
}

int form_zval(const FpForm& c) {
    int v = 0;
    while (v < static_cast<int>(c.size()) && c[static_cast<std::size_t>(v)] == 0) ++v;
    return v;
}

// univariate part U with c = z^v * homog(U); ascending coefficients
FpPoly form_unipart(const FpForm& c, long p, int zval) {
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<long> asc(static_cast<std::size_t>(d - zval) + 1);
    for (int i = zval; i <= d; ++i)
        asc[static_cast<std::size_t>(d - i)] = c[static_cast<std::size_t>(i)];
    return FpPoly(p, std::move(asc));
}

// binary form of degree deg from z-valuation and univariate part
FpForm form_from_parts(int deg, int zval, const FpPoly& uni) {
    FpForm c(static_cast<std::size_t>(deg) + 1, 0);
    for (int e = 0; e <= uni.degree(); ++e)
        c[static_cast<std::size_t>(deg - e)] = uni.c[static_cast<std::size_t>(e)];
    return c;
}

FpForm form_mul(const FpForm& a, const FpForm& b, long p) {
    FpForm r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

// gcd of nonzero binary forms: z^{min zval} * gcd of univariate parts
FpForm form_gcd(const FpForm& a, const FpForm& b, long p) {
    int va = form_zval(a), vb = form_zval(b);
    FpPoly g = fp_gcd(form_unipart(a, p, va), form_unipart(b, p, vb));
    int v = std::min(va, vb);
    return form_from_parts(v + g.degree(), v, g);
}

bool form_is_one(const FpForm& g) {
    // constant form equal to a unit
    return g.size() == 1 && g[0] != 0;
}

// integer lift with coefficients in [0, p)
BinaryForm lift_form(const FpForm& c) {
    std::vector<Int> z(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) z[i] = Int(c[i]);
    return BinaryForm(static_cast<int>(c.size()) - 1, std::move(z));
}

struct ModPShape {
    long p;
    int e1;
    long kappa;
    std::vector<std::pair<FpPoly, int>> irreducibles;  // (gbar, multiplicity)
};

ModPShape mod_p_shape(const BinaryForm& F, long p) {
    FpForm c = reduce_form(F, p);
    if (form_zero(c)) throw invalid_input("form imprimitive at p");
    ModPShape s;
    s.p = p;
    s.e1 = form_zval(c);
    FpPoly uni = form_unipart(c, p, s.e1);
    s.kappa = uni.leading();
    FpFactorization fac = fp_factor(fp_monic(uni));
    for (const FpFactor& f : fac.factors) s.irreducibles.emplace_back(f.poly, f.multiplicity);
    return s;
}

}  // namespace

bool LocalFactorization::reassembles(const BinaryForm& F) const {
    const Int pk = pow_int(p, static_cast<unsigned long>(precision));
    std::vector<Int> prod = f1.coeffs();
    for (const LocalFactor& f : factors) {
        const std::vector<Int>& g = f.lift.coeffs();
        std::vector<Int> nr(prod.size() + g.size() - 1, Int(0));
        for (std::size_t i = 0; i < prod.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                nr[i + j] = mod_floor(nr[i + j] + prod[i] * g[j], pk);
        prod = std::move(nr);
    }
    if (prod.size() != F.coeffs().size()) return false;
    for (std::size_t i = 0; i < prod.size(); ++i)
        if (mod_floor(F.coeffs()[i] - prod[i], pk) != 0) return false;
    return true;
}

LocalFactorization canonical_factorization(const BinaryForm& F, const Int& p, int k) {
    if (p < 2 || k < 1) throw invalid_input("need p >= 2, k >= 1");
    if (!F.is_primitive_at(p)) throw invalid_input("form imprimitive at p");
    const long pl = static_cast<long>(p.get_si());
    const int n = F.degree();
    const Int pk = pow_int(p, static_cast<unsigned long>(k));

    ModPShape shape = mod_p_shape(F, pl);

    LocalFactorization out;
    out.p = p;
    out.precision = k;
    out.e1 = shape.e1;
    out.nu = (F.leading() == 0) ? k : static_cast<long>(valuation(F.leading(), p));

    // dehomogenize at z = 1: f(x) = F(x, 1), ascending
    std::vector<Int> f(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) f[static_cast<std::size_t>(n - i)] = F.coeff(i);

    // stage 1: split off the z-power part; gbar is the unit constant kappa,
    // hbar the monic cofactor of degree n - e1
    FpPoly hbar = fp_constant(pl, 1);
    for (const auto& [g, m] : shape.irreducibles)
        for (int t = 0; t < m; ++t) hbar = fp_mul(hbar, g);
    FpPoly gbar = fp_constant(pl, shape.kappa);

    ZmPoly G, H;
    if (out.e1 == 0 && shape.irreducibles.empty()) {
        // constant cofactor: nothing to split
        G = zm_reduce(f, pk);
        H = {Int(1)};
    } else {
        auto lifted = hensel_lift_pair(f, gbar, hbar, pl, k);
        G = lifted.first;
        H = lifted.second;
    }

    // F_1 = homogenization of G to degree e1
    {
        std::vector<Int> c(static_cast<std::size_t>(out.e1) + 1, Int(0));
        for (std::size_t e = 0; e < G.size(); ++e)
            c[static_cast<std::size_t>(out.e1) - e] = G[e];
        out.f1 = BinaryForm(out.e1, std::move(c), pk);
        out.unit = out.f1.coeff(out.e1);
    }

    // stage 2: multifactor lift of the monic cofactor
    if (!shape.irreducibles.empty()) {
        std::vector<FpPoly> hbars;
        for (const auto& [g, m] : shape.irreducibles) {
            FpPoly pw = fp_constant(pl, 1);
            for (int t = 0; t < m; ++t) pw = fp_mul(pw, g);
            hbars.push_back(pw);
        }
        std::vector<Int> Hfull = H;
        std::vector<ZmPoly> lifted = hensel_lift_monic(Hfull, hbars, pl, k);
        for (std::size_t i = 0; i < lifted.size(); ++i) {
            const auto& [g, m] = shape.irreducibles[i];
            int deg = g.degree() * m;
            std::vector<Int> c(static_cast<std::size_t>(deg) + 1, Int(0));
            for (std::size_t e = 0; e < lifted[i].size(); ++e)
                c[static_cast<std::size_t>(deg) - e] = lifted[i][e];
            out.factors.push_back(
                LocalFactor{BinaryForm(deg, std::move(c), pk), g, m, g.degree()});
        }
    }
    return out;
}

Maximality dedekind_maximality(const BinaryForm& F, const Int& p) {
    const long pl = static_cast<long>(p.get_si());
    if (!F.is_primitive_at(p)) return Maximality::imprimitive;
    FpForm c = reduce_form(F, pl);
    const int n = F.degree();

    // radical lift H1, cofactor lift H2, difference quotient H3
    int e1 = form_zval(c);
    FpPoly uni = fp_monic(form_unipart(c, pl, e1));
    FpFactorization fac = fp_factor(uni);
    FpPoly rad = fp_constant(pl, 1);
    for (const FpFactor& f : fac.factors) rad = fp_mul(rad, f.poly);
    int zrad = e1 > 0 ? 1 : 0;
    FpForm h1 = form_from_parts(zrad + rad.degree(), zrad, rad);

    FpPoly cof = form_unipart(c, pl, e1);  // kappa * uni
    cof = fp_divmod(cof, rad).first;
    int zcof = e1 - zrad;
    FpForm h2 = form_from_parts(zcof + cof.degree(), zcof, cof);

    BinaryForm H1 = lift_form(h1), H2 = lift_form(h2);
    // H3 = (H1 H2 - F) / p as an integer binary form of degree n
    std::vector<Int> prod(static_cast<std::size_t>(n) + 1, Int(0));
    for (std::size_t i = 0; i < H1.coeffs().size(); ++i)
        for (std::size_t j = 0; j < H2.coeffs().size(); ++j)
            prod[i + j] += H1.coeffs()[i] * H2.coeffs()[j];
    FpForm h3(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) {
        Int diff = prod[static_cast<std::size_t>(i)] - F.coeff(i);
        if (!mpz_divisible_p(diff.get_mpz_t(), p.get_mpz_t()))
            throw std::logic_error("difference quotient not divisible by p");
        h3[static_cast<std::size_t>(i)] = to_fp(diff / p, pl);
    }

    FpForm g = form_gcd(h1, h2, pl);
    if (!form_is_one(g) && !form_zero(h3)) g = form_gcd(g, h3, pl);
    else if (!form_is_one(g) && form_zero(h3)) { /* gcd stays */ }
    return form_is_one(g) ? Maximality::maximal : Maximality::non_maximal;
}

LocalClass classify_local(const BinaryForm& F, const Int& p) {
    if (F.leading() == 0) throw invalid_input("classify_local needs f_0 != 0");
    LocalClass out;
    out.primitive = F.is_primitive_at(p);
    out.nu = static_cast<long>(valuation(F.leading(), p));
    if (!out.primitive) return out;

    const long pl = static_cast<long>(p.get_si());
    ModPShape shape = mod_p_shape(F, pl);
    out.e1 = shape.e1;
    out.maximal = dedekind_maximality(F, p) == Maximality::maximal;

    bool all_even = true;
    for (const auto& [g, m] : shape.irreducibles)
        if (m % 2) all_even = false;

    if (F.degree() % 2 == 1)
        out.squareful = (out.nu % 2 == 1) && out.e1 > 0 && all_even;
    else
        out.evenly_ramified = all_even && out.e1 % 2 == 0;

    if (all_even && out.e1 % 2 == 0) {
        // unit must additionally be a square mod p
        long k = shape.kappa;
        bool qr = false;
        if (pl == 2) qr = true;
        else {
            long e = (pl - 1) / 2, b = k % pl, r = 1;
            while (e) {
                if (e & 1) r = r * b % pl;
                b = b * b % pl;
                e >>= 1;
            }
            qr = (r == 1);
        }
        out.square_mod_p = qr;
    }
    return out;
}

std::optional<bool> has_distinguished_local(const BinaryForm& F, const Int& p) {
    if (F.degree() % 2 == 0) throw invalid_input("distinguished-orbit criterion is for odd n");
    LocalClass c = classify_local(F, p);
    if (!c.primitive) return std::nullopt;
    if (c.nu % 2 == 0) {
        if (c.nu > 0 && !c.maximal) return std::nullopt;
        return true;
    }
    if (!c.maximal) return std::nullopt;
    return c.squareful;
}

SqrtCriterion global_sqrt_criterion(const BinaryForm& F) {
    if (F.degree() % 2 == 0) throw invalid_input("criterion is for odd n");
    if (F.leading() == 0 || !F.is_primitive() || !is_separable(F))
        throw invalid_input("criterion needs a primitive separable form with f_0 != 0");
    if (abs(F.leading()) == 1) return SqrtCriterion::guaranteed;

    Int k = squarefree_part(F.leading());
    bool all_hypotheses = true;
    for (const Int& p : prime_divisors(F.leading())) {
        LocalClass c = classify_local(F, p);
        if (!c.maximal) {
            all_hypotheses = false;
            continue;
        }
        if (mpz_divisible_p(k.get_mpz_t(), p.get_mpz_t()) && !c.squareful)
            return SqrtCriterion::obstructed;
    }
    return all_hypotheses ? SqrtCriterion::guaranteed : SqrtCriterion::unknown;
}

bool is_maximal_order(const BinaryForm& F) {
    if (F.leading() == 0 || !F.is_primitive()) return false;
    Int d = discriminant(F);
    if (d == 0) throw invalid_input("maximality needs a separable form");
    for (const Int& p : prime_divisors(d)) {
        if (valuation(d, p) < 2) continue;
        if (dedekind_maximality(F, p) != Maximality::maximal) return false;
    }
    return true;
}

}  // namespace binic
