#pragma once

#include "polyfact/factor.hpp"

namespace polyfact {

Polynomial<Quaternion> primal_part(const Polynomial<DualQuaternion>& C);
Polynomial<Quaternion> dual_part(const Polynomial<DualQuaternion>& C);
Polynomial<DualQuaternion> make_dual_quaternion_poly(const Polynomial<Quaternion>& primal,
                                                     const Polynomial<Quaternion>& dual);

// Motion polynomial flags: C = P + eps Q is a motion polynomial when nu(C)
// is real and nonzero, generic when mrpf P = 1, bounded when mrpf P has no
// real zeros.
struct MotionClassification {
    bool is_motion = false;
    bool is_generic = false;
    std::optional<bool> is_bounded;       // defined only for motion polynomials
    std::optional<RealPolynomial> norm;   // nu(C) when real
    RealPolynomial primal_mrpf;
};

MotionClassification classify_motion(const Polynomial<DualQuaternion>& C);

// Factorization of a monic generic motion polynomial; guaranteed to
// succeed, any quadratic choice works at every step.
LinearFactorization<DualQuaternion> factor_generic_motion(
    const Polynomial<DualQuaternion>& C);

// Peels one right factor per real linear factor of the primal mrpf using
// czero(., (t-a)^2); requires every such factor to have multiplicity one.
// C = residue * peeled[0] * peeled[1] * ... and the residue is bounded.
struct UnboundedReduction {
    std::vector<DualQuaternion> peeled;  // zeros, left-to-right product order
    Polynomial<DualQuaternion> residue;

    Polynomial<DualQuaternion> reassemble() const {
        Polynomial<DualQuaternion> p = residue;
        for (const DualQuaternion& h : peeled)
            p = p * Polynomial<DualQuaternion>::linear_from_zero(h);
        return p;
    }
};

UnboundedReduction unbounded_reduce(const Polynomial<DualQuaternion>& C);

// A parametrized affine family of factorizations
//   t - (base_i + eps * sum_p v_p * directions[p][i]).
struct AffineFamily {
    std::vector<DualQuaternion> base;
    std::vector<std::string> parameters;
    std::vector<std::vector<Quaternion>> directions;  // [parameter][factor]

    std::size_t parameter_count() const { return parameters.size(); }

    LinearFactorization<DualQuaternion> at(const std::vector<Rational>& values) const;
    std::string str() const;
};

// Equality as affine subspaces of the dual-part coefficient space.
bool same_affine_family(const AffineFamily& a, const AffineFamily& b);

enum class ProjectionStatus { unique_solution, family, no_solution };

struct ProjectionResult {
    ProjectionStatus status = ProjectionStatus::no_solution;
    std::optional<LinearFactorization<DualQuaternion>> factorization;
    std::optional<AffineFamily> family;

    bool solved() const { return status != ProjectionStatus::no_solution; }
};

// Factorization by projection: lifts a factorization of the primal part to
// DH by solving the exact 4n x 4n linear system for the dual parts of the
// linear factors.
ProjectionResult factor_by_projection(const Polynomial<DualQuaternion>& C,
                                      const LinearFactorization<Quaternion>& primal);

} // namespace polyfact
