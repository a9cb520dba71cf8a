#include "binic/hensel.hpp"

#include <cassert>

namespace binic {

namespace {

void zm_trim(ZmPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

ZmPoly zm_reduce(const std::vector<Int>& c, const Int& m) {
    ZmPoly r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = mod_floor(c[i], m);
    zm_trim(r);
    return r;
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZmPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (Int& v : r) v = mod_floor(v, m);
    zm_trim(r);
    return r;
}

ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod_floor(r[i] - b[i], m);
    zm_trim(r);
    return r;
}

ZmPoly zm_rem_monic(const ZmPoly& a, const ZmPoly& monic, const Int& m) {
    assert(!monic.empty() && monic.back() == 1);
    ZmPoly r = a;
    zm_trim(r);
    while (r.size() >= monic.size()) {
        Int f = r.back();
        std::size_t shift = r.size() - monic.size();
        if (f != 0)
            for (std::size_t i = 0; i + 1 < monic.size(); ++i)
                r[shift + i] = mod_floor(r[shift + i] - f * monic[i], m);
        r.pop_back();
        zm_trim(r);
    }
    return r;
}

FpPoly zm_to_fp(const ZmPoly& a, long p) {
    std::vector<long> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = mpz_fdiv_ui(a[i].get_mpz_t(), static_cast<unsigned long>(p));
    return FpPoly(p, std::move(c));
}

ZmPoly fp_to_zm(const FpPoly& a) {
    ZmPoly r(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = Int(a.c[i]);
    return r;
}

std::pair<ZmPoly, ZmPoly> hensel_lift_pair(const std::vector<Int>& f, const FpPoly& gbar,
                                           const FpPoly& hbar, long p, int k) {
    auto [one, a, b] = fp_xgcd(gbar, hbar);
    if (one.degree() != 0) throw invalid_input("hensel: factors not coprime mod p");
    if (!hbar.is_monic()) throw invalid_input("hensel: hbar must be monic");

    const Int pk = pow_int(Int(p), static_cast<unsigned long>(k));
    ZmPoly G = fp_to_zm(gbar), H = fp_to_zm(hbar);
    Int pj(p);  // current modulus of validity
    for (int j = 1; j < k; ++j) {
        // e = (f - G H) / p^j, taken mod p
        ZmPoly prod = zm_mul(G, H, pk);
        std::vector<Int> e(std::max(f.size(), prod.size()), Int(0));
        for (std::size_t i = 0; i < f.size(); ++i) e[i] = f[i];
        for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
        for (Int& v : e) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), v.get_mpz_t(), pj.get_mpz_t());
            v = q;
        }
        FpPoly ebar = zm_to_fp(zm_reduce(e, pk), p);
        // solve gbar dH + hbar dG = ebar via the Bezout pair:
        // dH = (a e mod hbar), dG = b e + q gbar with a e = q hbar + dH
        auto [q, r] = fp_divmod(fp_mul(a, ebar), hbar);
        FpPoly dH = r;
        FpPoly dG = fp_add(fp_mul(b, ebar), fp_mul(q, gbar));
        ZmPoly dHz = fp_to_zm(dH), dGz = fp_to_zm(dG);
        for (Int& v : dHz) v *= pj;
        for (Int& v : dGz) v *= pj;
        ZmPoly G2(std::max(G.size(), dGz.size()), Int(0));
        for (std::size_t i = 0; i < G.size(); ++i) G2[i] = G[i];
        for (std::size_t i = 0; i < dGz.size(); ++i) G2[i] = mod_floor(G2[i] + dGz[i], pk);
        ZmPoly H2(std::max(H.size(), dHz.size()), Int(0));
        for (std::size_t i = 0; i < H.size(); ++i) H2[i] = H[i];
        for (std::size_t i = 0; i < dHz.size(); ++i) H2[i] = mod_floor(H2[i] + dHz[i], pk);
        zm_trim(G2);
        zm_trim(H2);
        G = std::move(G2);
        H = std::move(H2);
        pj *= p;
    }
    return {G, H};
}

std::vector<ZmPoly> hensel_lift_monic(const std::vector<Int>& f,
                                      const std::vector<FpPoly>& hbars, long p, int k) {
    if (hbars.size() == 1) {
        const Int pk = pow_int(Int(p), static_cast<unsigned long>(k));
        return {zm_reduce(f, pk)};
    }
    // split the factor list in two and lift the pair, then recurse
    std::size_t half = hbars.size() / 2;
    FpPoly left = fp_constant(hbars[0].p, 1), right = fp_constant(hbars[0].p, 1);
    for (std::size_t i = 0; i < half; ++i) left = fp_mul(left, hbars[i]);
    for (std::size_t i = half; i < hbars.size(); ++i) right = fp_mul(right, hbars[i]);
    auto [G, H] = hensel_lift_pair(f, left, right, p, k);
    std::vector<FpPoly> lh(hbars.begin(), hbars.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<FpPoly> rh(hbars.begin() + static_cast<std::ptrdiff_t>(half), hbars.end());
    std::vector<ZmPoly> out = hensel_lift_monic(G, lh, p, k);
    std::vector<ZmPoly> out2 = hensel_lift_monic(H, rh, p, k);
    out.insert(out.end(), out2.begin(), out2.end());
    return out;
}

}  // namespace binic
