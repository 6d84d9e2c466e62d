#pragma once

#include "polyfact/factor.hpp"

namespace polyfact {

// Decision procedure for quadratic split quaternion polynomials.  For each
// monic quadratic divisor M of nu(C): when nu(lrem(C,M)) != 0 the ordinary
// czero step applies; when it vanishes, the remainder parameterizes a line
// on the null quadric and a right zero (if the line lies in the right
// ruling family) is found in closed form after shifting M to t^2 + m.

struct SplitAttempt {
    RealPolynomial M;
    std::string branch;   // "czero" | "null-line" | "real-factor"
    bool success = false;
    std::string detail;   // failure reason or found factor
};

struct QuadraticSplitResult {
    std::vector<LinearFactorization<SplitQuaternion>> factorizations;
    std::vector<SplitAttempt> attempts;  // exhausted-choices certificate
    bool coefficients_independent = true;
    // True when the rational enumeration of quadratic divisors provably
    // covers every real quadratic divisor of nu(C), making an empty result
    // a proof of non-existence.
    bool certificate_complete = true;

    bool found() const { return !factorizations.empty(); }
};

QuadraticSplitResult factor_quadratic_split(const Polynomial<SplitQuaternion>& C);

} // namespace polyfact
