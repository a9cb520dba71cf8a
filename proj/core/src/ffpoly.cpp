#include "binic/ffpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace binic {

namespace {

long norm_mod(long a, long p) {
    a %= p;
    return a < 0 ? a + p : a;
}

long inv_mod(long a, long p) {
    long t = 0, nt = 1, r = p, nr = norm_mod(a, p);
    while (nr != 0) {
        long q = r / nr;
        std::swap(t, nt);
        nt -= q * t;
        std::swap(r, nr);
        nr -= q * r;
    }
    if (r != 1) throw invalid_input("not invertible mod p");
    return norm_mod(t, p);
}

}  // namespace

FpPoly::FpPoly(long prime, std::vector<long> coeffs) : p(prime), c(std::move(coeffs)) {
    if (p < 2) throw invalid_input("prime must be >= 2");
    for (long& v : c) v = norm_mod(v, p);
    trim();
}

void FpPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly fp_constant(long p, long a) { return FpPoly(p, {a}); }

FpPoly fp_x(long p) { return FpPoly(p, {0, 1}); }

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    std::vector<long> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = (r[i] + b.c[i]) % a.p;
    return FpPoly(a.p, std::move(r));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    std::vector<long> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = norm_mod(r[i] - b.c[i], a.p);
    return FpPoly(a.p, std::move(r));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p, {});
    std::vector<long> r(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = (r[i + j] + a.c[i] * b.c[j]) % a.p;
    }
    return FpPoly(a.p, std::move(r));
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw invalid_input("division by zero");
    const long p = a.p;
    std::vector<long> r = a.c;
    std::vector<long> q(r.size() >= b.c.size() ? r.size() - b.c.size() + 1 : 1, 0);
    long linv = inv_mod(b.leading(), p);
    while (r.size() >= b.c.size()) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.size() < b.c.size()) break;
        long f = (r.back() * linv) % p;
        std::size_t shift = r.size() - b.c.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r[shift + i] = norm_mod(r[shift + i] - f * b.c[i], p);
    }
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = fp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a);
}

FpPoly fp_monic(const FpPoly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    long f = inv_mod(a.leading(), a.p);
    std::vector<long> r = a.c;
    for (long& v : r) v = (v * f) % a.p;
    return FpPoly(a.p, std::move(r));
}

FpPoly fp_derivative(const FpPoly& a) {
    if (a.c.size() <= 1) return FpPoly(a.p, {});
    std::vector<long> r(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r[i - 1] = (a.c[i] * static_cast<long>(i % static_cast<std::size_t>(a.p))) % a.p;
    return FpPoly(a.p, std::move(r));
}

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& mod) {
    FpPoly r = fp_constant(base.p, 1);
    FpPoly b = fp_divmod(base, mod).second;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = fp_divmod(fp_mul(r, b), mod).second;
        b = fp_divmod(fp_mul(b, b), mod).second;
        k >>= 1;
    }
    return r;
}

long fp_eval(const FpPoly& a, long x) {
    long v = 0;
    x = norm_mod(x, a.p);
    for (std::size_t i = a.c.size(); i-- > 0;) v = (v * x + a.c[i]) % a.p;
    return v;
}

std::tuple<FpPoly, FpPoly, FpPoly> fp_xgcd(const FpPoly& a, const FpPoly& b) {
    const long p = a.p;
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = fp_constant(p, 1), s1 = FpPoly(p, {});
    FpPoly t0 = FpPoly(p, {}), t1 = fp_constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = fp_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    long f = inv_mod(r0.leading(), p);
    auto scale = [&](FpPoly& g) {
        for (long& v : g.c) v = (v * f) % p;
    };
    scale(r0);
    scale(s0);
    scale(t0);
    return {r0, s0, t0};
}

namespace {

// f monic with f' = 0, i.e. f = g(x^p); over the prime field the p-th root
// just contracts indices.
FpPoly pth_root(const FpPoly& f) {
    std::vector<long> r(f.c.size() / static_cast<std::size_t>(f.p) + 1, 0);
    for (std::size_t i = 0; i * static_cast<std::size_t>(f.p) < f.c.size(); ++i)
        r[i] = f.c[i * static_cast<std::size_t>(f.p)];
    return FpPoly(f.p, std::move(r));
}

// monic squarefree part decomposition: returns list of (g_i, i) with
// f = prod g_i^i, g_i squarefree and pairwise coprime.
void squarefree_decompose(const FpPoly& f, int outer_mult,
                          std::vector<std::pair<FpPoly, int>>& out) {
    FpPoly d = fp_derivative(f);
    if (d.is_zero()) {
        squarefree_decompose(pth_root(f), outer_mult * static_cast<int>(f.p), out);
        return;
    }
    FpPoly g = fp_gcd(f, d);
    FpPoly w = fp_divmod(f, g).first;  // product of squarefree factors, mult 1 each pass
    int i = 1;
    while (w.degree() > 0) {
        FpPoly y = fp_gcd(w, g);
        FpPoly part = fp_divmod(w, y).first;
        if (part.degree() > 0) out.emplace_back(fp_monic(part), i * outer_mult);
        w = std::move(y);
        g = fp_divmod(g, w).first;
        ++i;
    }
    if (g.degree() > 0) squarefree_decompose(g, outer_mult * static_cast<int>(f.p), out);
}

FpPoly random_poly(long p, int deg, Rng& rng) {
    std::uniform_int_distribution<long> d(0, p - 1);
    std::vector<long> c(static_cast<std::size_t>(deg) + 1);
    for (long& v : c) v = d(rng);
    return FpPoly(p, std::move(c));
}

// Equal-degree splitting of a monic squarefree f that is a product of
// irreducibles all of degree d.
void equal_degree_split(const FpPoly& f, int d, Rng& rng, std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const long p = f.p;
    while (true) {
        FpPoly a = random_poly(p, f.degree() - 1, rng);
        if (a.degree() <= 0) continue;
        FpPoly g = fp_gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(fp_divmod(f, g).first, d, rng, out);
            return;
        }
        FpPoly b;
        if (p == 2) {
            // trace map a + a^2 + a^4 + ... + a^{2^{d-1}} mod f
            b = FpPoly(p, {});
            FpPoly t = a;
            for (int i = 0; i < d; ++i) {
                b = fp_add(b, t);
                t = fp_divmod(fp_mul(t, t), f).second;
            }
        } else {
            Int e = (pow_int(Int(p), static_cast<unsigned long>(d)) - 1) / 2;
            b = fp_sub(fp_powmod(a, e, f), fp_constant(p, 1));
        }
        g = fp_gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(fp_divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

// distinct-degree then equal-degree factorization of monic squarefree f
std::vector<FpPoly> factor_squarefree(FpPoly f, Rng& rng) {
    std::vector<FpPoly> out;
    const long p = f.p;
    FpPoly xq = fp_x(p);  // will hold x^{p^d} mod f
    xq = fp_divmod(xq, f).second;
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.push_back(f);
            break;
        }
        xq = fp_powmod(xq, Int(p), f);
        FpPoly g = fp_gcd(fp_sub(xq, fp_x(p)), f);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            f = fp_divmod(f, g).first;
            xq = fp_divmod(xq, f).second;
        }
    }
    return out;
}

}  // namespace

FpFactorization fp_factor(const FpPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw invalid_input("factor of zero polynomial");
    FpFactorization out;
    out.unit = f.leading();
    if (f.degree() <= 0) return out;

    FpPoly g = fp_monic(f);

    // small p^degree: trial division against cached irreducible tables
    bool small = true;
    double bound = 1;
    for (int i = 0; i < g.degree() && small; ++i) {
        bound *= static_cast<double>(f.p);
        if (bound > 1e6) small = false;
    }
    if (small) {
        for (int d = 1; d <= g.degree() && g.degree() > 0; ++d) {
            if (2 * d > g.degree()) break;
            for (const FpPoly& irr : fp_irreducibles(f.p, d)) {
                int mult = 0;
                while (true) {
                    auto [q, r] = fp_divmod(g, irr);
                    if (!r.is_zero()) break;
                    g = q;
                    ++mult;
                }
                if (mult > 0) out.factors.push_back({irr, mult});
                if (g.degree() < d) break;
            }
        }
        if (g.degree() > 0) out.factors.push_back({g, 1});
        return out;
    }

    Rng rng(seed);
    std::vector<std::pair<FpPoly, int>> sf;
    squarefree_decompose(g, 1, sf);
    for (auto& [part, mult] : sf)
        for (FpPoly& irr : factor_squarefree(part, rng)) out.factors.push_back({irr, mult});
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FpFactor& a, const FpFactor& b) {
                  if (a.poly.degree() != b.poly.degree())
                      return a.poly.degree() < b.poly.degree();
                  return a.poly.c < b.poly.c;
              });
    return out;
}

bool fp_is_irreducible(const FpPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    FpPoly g = fp_monic(f);
    // x^{p^n} = x mod f and gcd(x^{p^{n/q}} - x, f) = 1 for prime q | n
    const long p = f.p;
    const int n = f.degree();
    FpPoly xq = fp_powmod(fp_x(p), Int(p), g);
    std::vector<FpPoly> powers{xq};  // x^{p^1}, x^{p^2}, ...
    for (int i = 1; i < n; ++i) powers.push_back(fp_powmod(powers.back(), Int(p), g));
    if (!(fp_sub(powers[static_cast<std::size_t>(n - 1)], fp_x(p)).is_zero())) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        bool prime_q = true;
        for (int t = 2; t * t <= q; ++t)
            if (q % t == 0) prime_q = false;
        if (!prime_q) continue;
        FpPoly diff = fp_sub(powers[static_cast<std::size_t>(n / q - 1)], fp_x(p));
        if (fp_gcd(diff, g).degree() != 0) return false;
    }
    return true;
}

const std::vector<FpPoly>& fp_irreducibles(long p, int degree) {
    static std::map<std::pair<long, int>, std::vector<FpPoly>> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto key = std::make_pair(p, degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<FpPoly> irr;
    std::vector<long> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = 1;
    while (true) {
        FpPoly f(p, c);
        bool reducible = false;
        if (degree == 1) {
            irr.push_back(f);
        } else {
            // trial-divide by smaller irreducibles
            for (int d = 1; !reducible && 2 * d <= degree; ++d)
                for (const FpPoly& g : fp_irreducibles(p, d))
                    if (fp_divmod(f, g).second.is_zero()) {
                        reducible = true;
                        break;
                    }
            if (!reducible) irr.push_back(f);
        }
        // next coefficient vector
        std::size_t i = 0;
        while (i + 1 < c.size() && c[i] == p - 1) c[i++] = 0;
        if (i + 1 == c.size()) break;
        ++c[i];
    }
    return cache[key] = std::move(irr);
}

bool fp_even_multiplicities(const FpPoly& f, std::uint64_t seed) {
    if (f.degree() % 2) return false;
    for (const FpFactor& fac : fp_factor(f, seed).factors)
        if (fac.multiplicity % 2) return false;
    return true;
}

}  // namespace binic
