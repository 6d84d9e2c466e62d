#pragma once

#include <vector>

#include "polyfact/rational.hpp"

namespace polyfact {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row major

struct LinearSolution {
    bool consistent = false;
    RationalVector particular;              // one solution, when consistent
    std::vector<RationalVector> nullspace;  // basis of the homogeneous solutions
};

// Exact Gauss-Jordan elimination over Q.
LinearSolution solve_linear(RationalMatrix A, RationalVector b);

int matrix_rank(RationalMatrix A);

// True when v lies in the span of the given basis vectors.
bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v);

// True when the two sets of vectors span the same subspace.
bool same_span(const std::vector<RationalVector>& a,
               const std::vector<RationalVector>& b);

} // namespace polyfact
