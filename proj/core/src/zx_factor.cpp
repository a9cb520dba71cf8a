#include "binic/zx_factor.hpp"

#include "binic/ffpoly.hpp"
#include "binic/hensel.hpp"
#include "binic/poly.hpp"

#include <algorithm>

namespace binic {

namespace {

using ZPoly = std::vector<Int>;

void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Int content(const ZPoly& f) {
    Int g = 0;
    for (const Int& v : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact division test: does d divide f over Z?
bool divides(const ZPoly& f, const ZPoly& d, ZPoly* quotient) {
    if (d.empty()) return false;
    ZPoly r = f;
    trim(r);
    if (r.empty()) {
        if (quotient) quotient->clear();
        return true;
    }
    if (r.size() < d.size()) return false;
    ZPoly q(r.size() - d.size() + 1, Int(0));
    for (std::size_t shift = q.size(); shift-- > 0;) {
        Int top = r[shift + d.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) return false;
        Int c = top / d.back();
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
    }
    trim(r);
    if (!r.empty()) return false;
    if (quotient) *quotient = q;
    return true;
}

PolyQ to_polyq(const ZPoly& f) {
    std::vector<Rat> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = Rat(f[i]);
    return PolyQ(std::move(c));
}

ZPoly from_polyq_primitive(const PolyQ& f) {
    Int den = 1;
    for (const Rat& v : f.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    ZPoly r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Rat v = f.coeffs()[i] * Rat(den);
        r[i] = v.get_num();
    }
    Int c = content(r);
    if (c > 1)
        for (Int& v : r) v /= c;
    if (!r.empty() && r.back() < 0)
        for (Int& v : r) v = -v;
    return r;
}

// Factor a primitive squarefree polynomial of degree >= 1.
std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& f) {
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg == 1) return {f};

    // choose a prime not dividing the leading coefficient with squarefree
    // reduction
    long p = 0;
    FpFactorization modular;
    for (long cand : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L,
                      47L, 53L, 59L, 61L, 67L, 71L, 73L, 79L, 83L, 89L, 97L, 101L,
                      103L, 107L, 109L, 113L, 127L, 131L, 137L, 139L, 149L}) {
        if (mpz_fdiv_ui(f.back().get_mpz_t(), static_cast<unsigned long>(cand)) == 0) continue;
        std::vector<long> c(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            long v = static_cast<long>(mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(cand)));
            c[i] = v;
        }
        FpPoly fb(cand, std::move(c));
        if (fp_gcd(fb, fp_derivative(fb)).degree() != 0) continue;
        modular = fp_factor(fb);
        p = cand;
        break;
    }
    if (p == 0) throw std::logic_error("no usable prime for factorization");
    if (modular.factors.size() == 1) return {f};

    // Landau-Mignotte style bound on factor coefficients
    Int maxc = 0;
    for (const Int& v : f)
        if (abs(v) > maxc) maxc = abs(v);
    Int bound = pow_int(Int(2), static_cast<unsigned long>(deg + 2)) *
                Int(static_cast<long>(deg + 1)) * maxc * abs(f.back());
    int k = 1;
    Int pk(p);
    while (pk <= 2 * bound) {
        pk *= p;
        ++k;
    }

    std::vector<FpPoly> hbars;
    for (const FpFactor& fac : modular.factors) hbars.push_back(fac.poly);

    // lift the monic factorization of (monic version of f)
    // f = lc * prod(monic); work with g = lc^{deg-1} f(x/lc) which is monic
    // Simpler: lift factors of f directly using the non-monic pair trick:
    // scale f to monic over Z/p^k by multiplying with lc^{-1} mod p^k.
    Int lc = f.back();
    Int lcinv;
    {
        Int pkz = pk;
        if (mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), pkz.get_mpz_t()) == 0)
            throw std::logic_error("leading coefficient not invertible mod p^k");
    }
    std::vector<Int> fmon(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fmon[i] = mod_floor(f[i] * lcinv, pk);
    std::vector<ZmPoly> lifted = hensel_lift_monic(fmon, hbars, p, k);

    // subset recombination
    std::vector<bool> used(lifted.size(), false);
    std::vector<ZPoly> out;
    ZPoly rest = f;
    auto symmetric = [&](const Int& v) {
        Int r = mod_floor(v, pk);
        if (2 * r > pk) r -= pk;
        return r;
    };
    for (std::size_t card = 1; card <= lifted.size(); ++card) {
        bool progress = true;
        while (progress) {
            progress = false;
            std::vector<std::size_t> avail;
            for (std::size_t i = 0; i < lifted.size(); ++i)
                if (!used[i]) avail.push_back(i);
            if (card > avail.size()) break;
            std::vector<std::size_t> idx(card);
            for (std::size_t i = 0; i < card; ++i) idx[i] = i;
            while (true) {
                // candidate = lc * prod of chosen lifted factors, coefficients
                // in symmetric range, then primitive part
                ZmPoly cand{mod_floor(Int(rest.back()), pk)};
                for (std::size_t i = 0; i < card; ++i)
                    cand = zm_mul(cand, lifted[avail[idx[i]]], pk);
                ZPoly g(cand.size());
                for (std::size_t i = 0; i < cand.size(); ++i) g[i] = symmetric(cand[i]);
                trim(g);
                Int c = content(g);
                if (c > 1)
                    for (Int& v : g) v /= c;
                if (!g.empty() && g.back() < 0)
                    for (Int& v : g) v = -v;
                ZPoly quotient;
                if (static_cast<int>(g.size()) > 1 && divides(rest, g, &quotient)) {
                    out.push_back(g);
                    for (std::size_t i = 0; i < card; ++i) used[avail[idx[i]]] = true;
                    rest = quotient;
                    Int cc = content(rest);
                    if (cc > 1)
                        for (Int& v : rest) v /= cc;
                    if (!rest.empty() && rest.back() < 0)
                        for (Int& v : rest) v = -v;
                    progress = true;
                    break;
                }
                // next combination
                std::size_t i = card;
                while (i > 0 && idx[i - 1] == avail.size() - card + (i - 1)) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < card; ++j) idx[j] = idx[j - 1] + 1;
            }
            if (static_cast<int>(rest.size()) <= 1) break;
        }
        if (static_cast<int>(rest.size()) <= 1) break;
    }
    if (static_cast<int>(rest.size()) > 1) out.push_back(rest);
    return out;
}

}  // namespace

ZxFactorization zx_factor(const std::vector<Int>& f_in) {
    ZPoly f = f_in;
    trim(f);
    if (f.empty()) throw invalid_input("factor of zero polynomial");
    ZxFactorization out;
    Int c = content(f);
    int sign = f.back() < 0 ? -1 : 1;
    out.unit = Rat(sign * c);
    for (Int& v : f) v /= sign * c;
    if (f.size() == 1) return out;

    // squarefree split over Q: f / gcd(f, f')
    PolyQ fq = to_polyq(f);
    PolyQ g = gcd(fq, fq.derivative());
    PolyQ sf = fq.divmod(g).first;
    ZPoly sfz = from_polyq_primitive(sf);

    std::vector<ZPoly> irr = factor_squarefree_primitive(sfz);
    std::sort(irr.begin(), irr.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    for (const ZPoly& q : irr) {
        int mult = 0;
        ZPoly rest = f, quo;
        while (divides(rest, q, &quo)) {
            ++mult;
            rest = quo;
        }
        out.factors.emplace_back(q, mult);
    }
    return out;
}

int zx_irreducible_factor_count(const std::vector<Int>& f) {
    return static_cast<int>(zx_factor(f).factors.size());
}

bool zx_is_irreducible(const std::vector<Int>& f) {
    auto fac = zx_factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1 &&
           fac.factors[0].first.size() == f.size();
}

}  // namespace binic
