#include "binic/matrix.hpp"

#include <cassert>

namespace binic {

MatQ MatQ::identity(std::size_t n) {
    MatQ I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

MatQ MatQ::operator*(const MatQ& o) const {
    assert(n_ == o.m_);
    MatQ r(m_, o.n_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.n_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

MatQ MatQ::operator+(const MatQ& o) const {
    assert(m_ == o.m_ && n_ == o.n_);
    MatQ r(m_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

MatQ MatQ::operator-(const MatQ& o) const {
    assert(m_ == o.m_ && n_ == o.n_);
    MatQ r(m_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

MatQ MatQ::scaled(const Rat& c) const {
    MatQ r(m_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

MatQ MatQ::transposed() const {
    MatQ r(n_, m_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rat MatQ::det() const {
    assert(m_ == n_);
    MatQ w = *this;
    Rat d = 1;
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t piv = c;
        while (piv < n_ && w.at(piv, c) == 0) ++piv;
        if (piv == n_) return Rat(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(w.at(piv, j), w.at(c, j));
            d = -d;
        }
        d *= w.at(c, c);
        Rat inv = 1 / w.at(c, c);
        for (std::size_t i = c + 1; i < n_; ++i) {
            if (w.at(i, c) == 0) continue;
            Rat f = w.at(i, c) * inv;
            for (std::size_t j = c; j < n_; ++j) w.at(i, j) -= f * w.at(c, j);
        }
    }
    return d;
}

MatQ MatQ::inverse() const {
    assert(m_ == n_);
    MatQ w = *this;
    MatQ inv = identity(n_);
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t piv = c;
        while (piv < n_ && w.at(piv, c) == 0) ++piv;
        if (piv == n_) throw invalid_input("matrix not invertible");
        if (piv != c)
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(w.at(piv, j), w.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        Rat f = 1 / w.at(c, c);
        for (std::size_t j = 0; j < n_; ++j) {
            w.at(c, j) *= f;
            inv.at(c, j) *= f;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == c || w.at(i, c) == 0) continue;
            Rat g = w.at(i, c);
            for (std::size_t j = 0; j < n_; ++j) {
                w.at(i, j) -= g * w.at(c, j);
                inv.at(i, j) -= g * inv.at(c, j);
            }
        }
    }
    return inv;
}

bool MatQ::is_integral() const {
    for (const Rat& x : a_)
        if (!is_integer(x)) return false;
    return true;
}

bool MatQ::is_zero() const {
    for (const Rat& x : a_)
        if (x != 0) return false;
    return true;
}

Int MatQ::denominator_lcm() const {
    Int l = 1;
    for (const Rat& x : a_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    return l;
}

MatZ MatQ::numerator(const Int& den) const {
    MatZ r(m_, n_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            Rat v = at(i, j) * Rat(den);
            if (!is_integer(v)) throw invalid_input("denominator does not clear matrix");
            r.at(i, j) = v.get_num();
        }
    return r;
}

std::vector<Rat> MatQ::row(std::size_t i) const {
    return std::vector<Rat>(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
}

void MatQ::set_row(std::size_t i, const std::vector<Rat>& r) {
    assert(r.size() == n_);
    for (std::size_t j = 0; j < n_; ++j) at(i, j) = r[j];
}

MatZ MatZ::identity(std::size_t n) {
    MatZ I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

MatZ MatZ::operator*(const MatZ& o) const {
    assert(n_ == o.m_);
    MatZ r(m_, o.n_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.n_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

MatZ MatZ::operator+(const MatZ& o) const {
    MatZ r(m_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

MatZ MatZ::operator-(const MatZ& o) const {
    MatZ r(m_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

MatZ MatZ::transposed() const {
    MatZ r(n_, m_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Int MatZ::det() const {
    assert(m_ == n_);
    if (n_ == 0) return 1;
    MatZ w = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c + 1 < n_; ++c) {
        std::size_t piv = c;
        while (piv < n_ && w.at(piv, c) == 0) ++piv;
        if (piv == n_) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(w.at(piv, j), w.at(c, j));
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n_; ++i) {
            for (std::size_t j = c + 1; j < n_; ++j) {
                Int t = w.at(i, j) * w.at(c, c) - w.at(i, c) * w.at(c, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, c) = 0;
        }
        prev = w.at(c, c);
    }
    return sign > 0 ? w.at(n_ - 1, n_ - 1) : -w.at(n_ - 1, n_ - 1);
}

MatQ MatZ::to_q(const Int& den) const {
    MatQ r(m_, n_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            r.at(i, j) = Rat(at(i, j), den);
            r.at(i, j).canonicalize();
        }
    return r;
}

namespace {

// In-place row HNF sweep. Returns pivot (row, col) pairs in order.
std::vector<std::pair<std::size_t, std::size_t>> hnf_sweep(MatZ& w) {
    const std::size_t m = w.rows(), n = w.cols();
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // eliminate below row r in column c with Euclidean row ops
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (w.at(i, c) != 0 &&
                    (best == m || abs(w.at(i, c)) < abs(w.at(best, c))))
                    best = i;
            if (best == m) break;
            if (best != r)
                for (std::size_t j = 0; j < n; ++j) std::swap(w.at(best, j), w.at(r, j));
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (w.at(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.at(i, c).get_mpz_t(), w.at(r, c).get_mpz_t());
                for (std::size_t j = 0; j < n; ++j) w.at(i, j) -= q * w.at(r, j);
                if (w.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (w.at(r, c) == 0) continue;
        if (w.at(r, c) < 0)
            for (std::size_t j = 0; j < n; ++j) w.at(r, j) = -w.at(r, j);
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w.at(i, c).get_mpz_t(), w.at(r, c).get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j < n; ++j) w.at(i, j) -= q * w.at(r, j);
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

}  // namespace

MatZ MatZ::hnf() const {
    MatZ w = *this;
    auto pivots = hnf_sweep(w);
    MatZ out(pivots.size(), n_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < n_; ++j) out.at(i, j) = w.at(pivots[i].first, j);
    return out;
}

MatZ MatZ::left_kernel() const {
    // Run the HNF sweep on [this | I]; rows whose left block vanished give
    // the kernel.
    const std::size_t m = m_, n = n_;
    MatZ aug(m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = 1;
    }
    // Sweep only the first n columns; the identity block records row ops.
    MatZ w = aug;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (w.at(i, c) != 0 &&
                    (best == m || abs(w.at(i, c)) < abs(w.at(best, c))))
                    best = i;
            if (best == m) break;
            if (best != r)
                for (std::size_t j = 0; j < n + m; ++j) std::swap(w.at(best, j), w.at(r, j));
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (w.at(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.at(i, c).get_mpz_t(), w.at(r, c).get_mpz_t());
                for (std::size_t j = 0; j < n + m; ++j) w.at(i, j) -= q * w.at(r, j);
                if (w.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (w.at(r, c) != 0) ++r;
    }
    std::vector<std::size_t> zero_rows;
    for (std::size_t i = r; i < m; ++i) zero_rows.push_back(i);
    MatZ ker(zero_rows.size(), m);
    for (std::size_t i = 0; i < zero_rows.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) ker.at(i, j) = w.at(zero_rows[i], n + j);
    return ker;
}

std::vector<Rat> solve_left(const MatQ& M, const std::vector<Rat>& b) {
    // x * M = b  <=>  M^T * x^T = b^T
    MatQ inv = M.inverse();
    std::vector<Rat> x(M.rows());
    for (std::size_t j = 0; j < M.rows(); ++j) {
        Rat s = 0;
        for (std::size_t k = 0; k < b.size(); ++k) s += b[k] * inv.at(k, j);
        x[j] = s;
    }
    return x;
}

std::vector<Rat> mul_row(const std::vector<Rat>& x, const MatQ& M) {
    std::vector<Rat> y(M.cols());
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] == 0) continue;
        for (std::size_t j = 0; j < M.cols(); ++j) y[j] += x[k] * M.at(k, j);
    }
    return y;
}

}  // namespace binic
