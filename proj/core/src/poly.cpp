#include "binic/poly.hpp"

#include "binic/matrix.hpp"

#include <cassert>

namespace binic {

void PolyQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::x() { return PolyQ({Rat(0), Rat(1)}); }

PolyQ PolyQ::constant(const Rat& a) { return PolyQ({a}); }

PolyQ PolyQ::operator+(const PolyQ& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator-() const {
    std::vector<Rat> r(c_);
    for (Rat& v : r) v = -v;
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (c_.empty() || o.c_.empty()) return PolyQ();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return PolyQ(std::move(r));
}

PolyQ PolyQ::scaled(const Rat& a) const {
    std::vector<Rat> r(c_);
    for (Rat& v : r) v *= a;
    return PolyQ(std::move(r));
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return PolyQ(std::move(r));
}

Rat PolyQ::eval(const Rat& t) const {
    Rat v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
    return v;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& d) const {
    if (d.is_zero()) throw invalid_input("division by zero polynomial");
    std::vector<Rat> r = c_;
    std::vector<Rat> q(r.size() > d.c_.size() ? r.size() - d.c_.size() + 1 : 1);
    Rat lead = d.c_.back();
    while (r.size() >= d.c_.size() && !(r.size() == 0)) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.size() < d.c_.size()) break;
        Rat f = r.back() / lead;
        std::size_t shift = r.size() - d.c_.size();
        q[shift] = f;
        for (std::size_t i = 0; i < d.c_.size(); ++i) r[shift + i] -= f * d.c_[i];
    }
    return {PolyQ(std::move(q)), PolyQ(std::move(r))};
}

PolyQ PolyQ::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / leading());
}

PolyQ gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

int sign_at_minus_inf(const PolyQ& p) {
    int s = sgn(p.leading());
    return (p.degree() % 2) ? -s : s;
}

int sign_at_plus_inf(const PolyQ& p) { return sgn(p.leading()); }

std::vector<PolyQ> sturm_sequence(const PolyQ& f) {
    std::vector<PolyQ> seq;
    seq.push_back(f);
    seq.push_back(f.derivative());
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        PolyQ r = seq[seq.size() - 2].divmod(seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int sturm_real_roots(const PolyQ& f) {
    if (f.degree() <= 0) return 0;
    auto seq = sturm_sequence(f);
    std::vector<int> lo, hi;
    for (const PolyQ& p : seq) {
        if (p.is_zero()) continue;
        lo.push_back(sign_at_minus_inf(p));
        hi.push_back(sign_at_plus_inf(p));
    }
    return variations(lo) - variations(hi);
}

int sturm_real_roots(const PolyQ& f, const Rat& a, const Rat& b) {
    if (f.degree() <= 0) return 0;
    auto seq = sturm_sequence(f);
    std::vector<int> lo, hi;
    for (const PolyQ& p : seq) {
        if (p.is_zero()) continue;
        lo.push_back(sgn(p.eval(a)));
        hi.push_back(sgn(p.eval(b)));
    }
    return variations(lo) - variations(hi);
}

Rat resultant_formal(const PolyQ& a, const PolyQ& b, int da, int db) {
    assert(a.degree() <= da && b.degree() <= db);
    if (da == 0 && db == 0) return 1;
    const int N = da + db;
    MatQ S(N, N);
    // db rows of a's (descending, padded) coefficients, then da rows of b's.
    auto coeff_desc = [](const PolyQ& p, int formal, int k) {
        // k-th descending coefficient: x^{formal-k}
        int idx = formal - k;
        if (idx < 0 || idx > p.degree()) return Rat(0);
        return p[idx];
    };
    for (int i = 0; i < db; ++i)
        for (int k = 0; k <= da; ++k) S.at(i, i + k) = coeff_desc(a, da, k);
    for (int i = 0; i < da; ++i)
        for (int k = 0; k <= db; ++k) S.at(db + i, i + k) = coeff_desc(b, db, k);
    return S.det();
}

}  // namespace binic
