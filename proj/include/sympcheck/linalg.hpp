#pragma once

#include "sympcheck/rational.hpp"

#include <optional>

namespace sympcheck::linalg {

int rank(RationalMatrix m);

/// Nonzero v with vᵀ·m = 0, if the rows of m are dependent.
std::optional<RationalVector> left_kernel_vector(const RationalMatrix& m);

Rational determinant(RationalMatrix m);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int nullity = 0;

    int signature() const { return positive - negative; }
};

/// Inertia of a symmetric matrix by Lagrange's method: diagonal pivots where
/// available, otherwise e_i <- e_i + e_j on a nonzero off-diagonal pair.
Inertia inertia(RationalMatrix symmetric);

}  // namespace sympcheck::linalg
