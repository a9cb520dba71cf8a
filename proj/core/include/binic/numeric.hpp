#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace binic {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an operation's precondition is violated by the input.
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an exhaustive budget guard rejects a request.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a bounded search cannot decide a question at its cap.
struct undecided : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

/// Floor of a rational, as an integer.
inline Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

/// x mod m in [0, m), m > 0.
inline Int mod_floor(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// p-adic valuation of a nonzero integer.
inline unsigned long valuation(Int x, const Int& p) {
    if (x == 0) throw invalid_input("valuation of zero");
    unsigned long v = 0;
    while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
        x /= p;
        ++v;
    }
    return v;
}

inline Int isqrt(const Int& x) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Squarefree part of a nonzero integer (product of primes with odd exponent).
/// Trial division; intended for desk-scale leading coefficients.
inline Int squarefree_part(Int x) {
    if (x == 0) throw invalid_input("squarefree part of zero");
    Int out = 1;
    if (x < 0) x = -x;
    for (Int d = 2; d * d <= x; ++d) {
        unsigned long v = 0;
        while (x % d == 0) { x /= d; ++v; }
        if (v % 2) out *= d;
    }
    return out * x;
}

inline std::vector<Int> prime_divisors(Int x) {
    if (x == 0) throw invalid_input("prime divisors of zero");
    if (x < 0) x = -x;
    std::vector<Int> ps;
    for (Int d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            ps.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) ps.push_back(x);
    return ps;
}

/// Deterministic RNG used by every randomized routine; seeds are explicit.
using Rng = std::mt19937_64;

inline Int random_int(Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Int(d(rng));
}

}  // namespace binic
