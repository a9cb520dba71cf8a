#include "binic/binary_form.hpp"

#include "binic/matrix.hpp"

#include <sstream>

namespace binic {

BinaryForm::BinaryForm(int n, std::vector<Int> coeffs, Int modulus)
    : n_(n), c_(std::move(coeffs)), mod_(std::move(modulus)) {
    if (n_ < 0 || c_.size() != static_cast<std::size_t>(n_) + 1)
        throw invalid_input("coefficient vector must have length degree+1");
    if (mod_ < 0) throw invalid_input("modulus must be nonnegative");
    if (mod_ > 0)
        for (Int& v : c_) v = mod_floor(v, mod_);
}

PolyQ BinaryForm::dehomogenized() const {
    std::vector<Rat> asc(static_cast<std::size_t>(n_) + 1);
    for (int i = 0; i <= n_; ++i) asc[static_cast<std::size_t>(n_ - i)] = Rat(c_[static_cast<std::size_t>(i)]);
    return PolyQ(std::move(asc));
}

bool BinaryForm::is_primitive() const {
    Int g = 0;
    for (const Int& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g == 1;
}

bool BinaryForm::is_primitive_at(const Int& p) const {
    for (const Int& v : c_)
        if (v % p != 0) return true;
    return false;
}

std::string BinaryForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= n_; ++i) {
        const Int& f = c_[static_cast<std::size_t>(i)];
        if (f == 0) continue;
        if (!first) os << (f > 0 ? " + " : " - ");
        else if (f < 0) os << "-";
        Int a = abs(f);
        int xd = n_ - i, zd = i;
        bool coeff_one = (a == 1) && (xd + zd > 0);
        if (!coeff_one) os << a.get_str();
        if (xd > 0) os << "x" << (xd > 1 ? "^" + std::to_string(xd) : "");
        if (zd > 0) os << "z" << (zd > 1 ? "^" + std::to_string(zd) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Int discriminant(const BinaryForm& F) {
    const int n = F.degree();
    if (n < 2) throw invalid_input("discriminant needs degree >= 2");
    if (!F.integral_mode()) throw invalid_input("discriminant needs integral mode");
    // Res(F_x, F_z) = (-1)^{n(n-1)/2} n^{n-2} disc(F); both partials have
    // degree n-1, so the Sylvester matrix below is (2n-2) x (2n-2).
    const std::size_t d = static_cast<std::size_t>(n) - 1;
    std::vector<Int> fx(d + 1), fz(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        fx[i] = Int(static_cast<long>(n - static_cast<int>(i))) * F.coeff(static_cast<int>(i));
        fz[i] = Int(static_cast<long>(i + 1)) * F.coeff(static_cast<int>(i) + 1);
    }
    MatZ S(2 * d, 2 * d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k <= d; ++k) {
            S.at(r, r + k) = fx[k];
            S.at(d + r, r + k) = fz[k];
        }
    Int res = S.det();
    Int denom = pow_int(Int(n), static_cast<unsigned long>(n - 2));
    if (!mpz_divisible_p(res.get_mpz_t(), denom.get_mpz_t()))
        throw std::logic_error("discriminant normalization failed");
    Int disc;
    mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), denom.get_mpz_t());
    if ((static_cast<long>(n) * (n - 1) / 2) % 2) disc = -disc;
    return disc;
}

BinaryForm monicize(const BinaryForm& F) {
    if (F.leading() == 0) throw invalid_input("monicize needs f_0 != 0");
    const int n = F.degree();
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    Int p = 1;
    c[0] = 1;
    for (int i = 1; i <= n; ++i) {
        c[static_cast<std::size_t>(i)] = F.coeff(i) * p;  // f_i f_0^{i-1}
        p *= F.leading();
    }
    return BinaryForm(n, std::move(c), F.modulus());
}

BinaryForm m1_act(const BinaryForm& F, const Int& s, const Int& d) {
    const int n = F.degree();
    const Int c = d * s;
    std::vector<Int> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Int v = 0;
        Int cp = 1;
        for (int j = i; j >= 0; --j) {
            // contribution of f_j x^{n-j} (x + c z)^... : f_j C(n-j, i-j) c^{i-j}
            v += F.coeff(j) * binomial(static_cast<unsigned long>(n - j),
                                       static_cast<unsigned long>(i - j)) *
                 cp;
            cp *= c;
        }
        out[static_cast<std::size_t>(i)] = v;
    }
    return BinaryForm(n, std::move(out), F.modulus());
}

std::pair<BinaryForm, Int> canonical_rep(const BinaryForm& F) {
    if (F.leading() <= 0) throw invalid_input("canonical_rep needs f_0 > 0");
    const Int window = Int(F.degree()) * F.leading();
    const Int b = mod_floor(F.coeff(1), window);
    const Int s = (b - F.coeff(1)) / window;
    return {m1_act(F, s), b};
}

Signature real_signature(const BinaryForm& F) {
    if (F.leading() == 0) throw invalid_input("real_signature needs f_0 != 0");
    if (!is_separable(F)) throw invalid_input("real_signature needs a separable form");
    int r1 = sturm_real_roots(F.dehomogenized());
    return Signature{r1, (F.degree() - r1) / 2};
}

Height::Height(const BinaryForm& F) {
    BinaryForm mon = monicize(F);
    const int n = mon.degree();
    // shift x -> x - f_1/n over Q to kill the x^{n-1}z coefficient
    Rat t = Rat(-mon.coeff(1), Int(n));
    t.canonicalize();
    tails_.resize(static_cast<std::size_t>(n) - 1);
    for (int i = 2; i <= n; ++i) {
        Rat v = 0;
        Rat tp = 1;
        for (int j = i; j >= 0; --j) {
            v += Rat(mon.coeff(j)) * Rat(binomial(static_cast<unsigned long>(n - j),
                                                  static_cast<unsigned long>(i - j))) *
                 tp;
            tp *= t;
        }
        tails_[static_cast<std::size_t>(i - 2)] = abs(v);
    }
    arg_ = 2;
    for (int i = 3; i <= n; ++i) {
        // |a|^{1/arg} < |b|^{1/i}  <=>  |a|^i < |b|^arg
        const Rat& a = tails_[static_cast<std::size_t>(arg_ - 2)];
        const Rat& b = tails_[static_cast<std::size_t>(i - 2)];
        if (pow_rat(a, static_cast<unsigned long>(i)) <
            pow_rat(b, static_cast<unsigned long>(arg_)))
            arg_ = i;
    }
}

bool Height::less_than(const Rat& bound) const {
    for (std::size_t k = 0; k < tails_.size(); ++k)
        if (tails_[k] >= pow_rat(bound, static_cast<unsigned long>(k + 2))) return false;
    return true;
}

int Height::compare(const Height& a, const Height& b) {
    // max_i alpha_i vs max_j beta_j with alpha_i = |a_i|^{1/i}
    const Rat& av = a.value();
    const Rat& bv = b.value();
    Rat lhs = pow_rat(av, static_cast<unsigned long>(b.arg()));
    Rat rhs = pow_rat(bv, static_cast<unsigned long>(a.arg()));
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

}  // namespace binic
