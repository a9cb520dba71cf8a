#pragma once

#include "binic/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace binic {

// Dense exact matrices, row-major. Coordinate vectors are rows and act on
// the left: y = x * M.

class MatZ;

class MatQ {
  public:
    MatQ() = default;
    MatQ(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), a_(rows * cols) {}
    static MatQ identity(std::size_t n);

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    MatQ operator*(const MatQ& o) const;
    MatQ operator+(const MatQ& o) const;
    MatQ operator-(const MatQ& o) const;
    MatQ scaled(const Rat& c) const;
    MatQ transposed() const;
    bool operator==(const MatQ& o) const = default;

    Rat det() const;
    MatQ inverse() const;
    bool is_integral() const;
    bool is_zero() const;

    /// Least common multiple of entry denominators.
    Int denominator_lcm() const;
    /// This matrix scaled by `den` as an integer matrix; caller supplies
    /// den = denominator_lcm() or a multiple.
    MatZ numerator(const Int& den) const;

    std::vector<Rat> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Rat>& r);

  private:
    std::size_t m_ = 0, n_ = 0;
    std::vector<Rat> a_;
};

class MatZ {
  public:
    MatZ() = default;
    MatZ(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), a_(rows * cols) {}
    static MatZ identity(std::size_t n);

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    MatZ operator*(const MatZ& o) const;
    MatZ operator+(const MatZ& o) const;
    MatZ operator-(const MatZ& o) const;
    MatZ transposed() const;
    bool operator==(const MatZ& o) const = default;

    Int det() const;  // fraction-free Bareiss
    MatQ to_q(const Int& den = 1) const;

    /// Canonical row Hermite normal form with zero rows dropped.
    /// Pivots positive, entries above each pivot reduced into [0, pivot).
    MatZ hnf() const;

    /// Basis of the left kernel { x : x * this = 0 }, one row per basis vector.
    MatZ left_kernel() const;

  private:
    std::size_t m_ = 0, n_ = 0;
    std::vector<Int> a_;
};

/// Solve x * M = b for a square invertible M; throws invalid_input if singular.
std::vector<Rat> solve_left(const MatQ& M, const std::vector<Rat>& b);

std::vector<Rat> mul_row(const std::vector<Rat>& x, const MatQ& M);

}  // namespace binic
