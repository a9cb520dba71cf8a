#pragma once

#include "binic/binary_form.hpp"
#include "binic/matrix.hpp"

namespace binic {

/// Pair of symmetric n x n integer matrices, the orbit representative of the
/// parametrization. The pencil form is det(x A + z B).
struct SymPair {
    MatZ A, B;

    int n() const { return static_cast<int>(A.rows()); }
    bool symmetric() const;
    bool operator==(const SymPair&) const = default;
};

/// det(x A + z B) as an integral binary form, by exact interpolation at
/// n + 1 points.
BinaryForm det_form(const SymPair& P);

/// inv(x A + z B) = (-1)^{floor(n/2)} det(x A + z B).
BinaryForm inv_form(const SymPair& P);

}  // namespace binic
