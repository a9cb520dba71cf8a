#pragma once

#include "binic/numeric.hpp"

#include <vector>

namespace binic {

/// Irreducible factorization over Z of a nonzero integer polynomial
/// (ascending coefficients). Returns primitive irreducible factors with
/// multiplicities; the content (with sign) goes into `unit`.
struct ZxFactorization {
    Rat unit = 1;
    std::vector<std::pair<std::vector<Int>, int>> factors;
};

ZxFactorization zx_factor(const std::vector<Int>& f);

/// Number of distinct irreducible factors over Q.
int zx_irreducible_factor_count(const std::vector<Int>& f);

bool zx_is_irreducible(const std::vector<Int>& f);

}  // namespace binic
