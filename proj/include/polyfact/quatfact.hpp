#pragma once

#include "polyfact/factor.hpp"

namespace polyfact {

// One conjugate pair of sphere factors (t - h)(t - Cj(h)) with
// h = x + U*y, U any unit imaginary quaternion (U^2 = -1): a whole
// 2-sphere of factorizations of the real quadratic (t - x)^2 + y^2.
struct SphereFamily {
    Rational x;
    Rational y;  // > 0
    int multiplicity = 1;

    RealPolynomial quadratic() const {
        return RealPolynomial(std::vector<Rational>{x * x + y * y,
                                                    Rational(-2) * x, Rational(1)});
    }
    // Canonical representative h = x + iy.
    Quaternion representative() const { return {x, y, Rational(0), Rational(0)}; }
};

// Complete description of the factorizations of a monic quaternion
// polynomial C = F G with F = mrpf C: real roots of F become fixed real
// factors, conjugate complex root pairs become sphere families, and the
// factorizations of G are enumerated exhaustively.  Any combination of an
// F arrangement with a G factorization is a factorization of C.
struct QuaternionFactorizations {
    RealPolynomial real_part;  // mrpf C
    Polynomial<Quaternion> g_part;
    std::vector<std::pair<Rational, int>> real_roots;  // with multiplicity
    std::vector<SphereFamily> sphere_families;
    AllFactorizationsResult<Quaternion> g_factorizations;
};

QuaternionFactorizations quaternion_factorizations(const Polynomial<Quaternion>& C);

// Concrete factor tuples with sphere families instantiated at their
// canonical representatives (inside the complex subalgebra <1, i>, where
// all real-part factors commute): every distinct permutation of the
// real-part factors combined with every G factorization, capped at limit.
std::vector<LinearFactorization<Quaternion>> canonical_factor_tuples(
    const QuaternionFactorizations& qf, const Polynomial<Quaternion>& C,
    std::size_t limit = 64);

} // namespace polyfact
