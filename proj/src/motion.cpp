#include "polyfact/motion.hpp"

#include "polyfact/linalg.hpp"

namespace polyfact {

namespace {
using DPoly = Polynomial<DualQuaternion>;
using QPoly = Polynomial<Quaternion>;
using DFact = LinearFactorization<DualQuaternion>;
} // namespace

QPoly primal_part(const DPoly& C) {
    std::vector<Quaternion> c;
    c.reserve(C.coefficients().size());
    for (const DualQuaternion& d : C.coefficients()) c.push_back(d.primal);
    return QPoly(std::move(c));
}

QPoly dual_part(const DPoly& C) {
    std::vector<Quaternion> c;
    c.reserve(C.coefficients().size());
    for (const DualQuaternion& d : C.coefficients()) c.push_back(d.dual);
    return QPoly(std::move(c));
}

DPoly make_dual_quaternion_poly(const QPoly& primal, const QPoly& dual) {
    int d = std::max(primal.degree(), dual.degree());
    std::vector<DualQuaternion> c;
    c.reserve(d + 1);
    for (int i = 0; i <= d; ++i) c.emplace_back(primal.coeff(i), dual.coeff(i));
    return DPoly(std::move(c));
}

MotionClassification classify_motion(const DPoly& C) {
    if (C.is_zero()) throw ZeroPolynomialError("classification of the zero polynomial");
    MotionClassification mc;
    mc.norm = is_real_norm(C);
    mc.is_motion = mc.norm.has_value() && !mc.norm->is_zero();
    QPoly P = primal_part(C);
    mc.primal_mrpf = P.is_zero() ? RealPolynomial() : mrpf(P);
    if (mc.is_motion) {
        mc.is_generic = mc.primal_mrpf.degree() == 0;
        mc.is_bounded = mc.primal_mrpf.degree() == 0 || !has_real_root(mc.primal_mrpf);
    }
    return mc;
}

LinearFactorization<DualQuaternion> factor_generic_motion(const DPoly& C) {
    MotionClassification mc = classify_motion(C);
    if (!mc.is_motion || !mc.is_generic)
        throw MrpfNotTrivialError("factor_generic_motion needs a generic motion polynomial");
    if (!C.is_monic()) throw NotMonicError("expected a monic polynomial");

    DPoly Ck = C;
    std::vector<DualQuaternion> peel;
    while (Ck.degree() > 1) {
        auto nu = is_real_norm(Ck);
        if (!nu) throw InternalDefectError("intermediate quotient lost its real norm");
        auto choices = quadratic_choices(factor_real(*nu));
        if (choices.empty())
            throw InternalDefectError("norm polynomial has no quadratic factor");
        CzeroResult<DualQuaternion> res = czero_checked(Ck, choices.front().M);
        if (res.status != CzeroStatus::ok)
            throw InternalDefectError(
                "generic motion polynomial hit a pseudofactor, which is impossible");
        peel.push_back(res.zero);
        Ck = lquo(Ck, DPoly::linear_from_zero(res.zero));
    }
    if (Ck.degree() == 1) peel.push_back(-Ck.coeff(0));
    std::vector<DualQuaternion> zeros(peel.rbegin(), peel.rend());
    return DFact::checked(C, DualQuaternion(1), std::move(zeros));
}

UnboundedReduction unbounded_reduce(const DPoly& C) {
    MotionClassification mc = classify_motion(C);
    if (!mc.is_motion)
        throw NonRealNormError("unbounded reduction needs a motion polynomial");
    if (!C.is_monic()) throw NotMonicError("expected a monic polynomial");

    RealLinearPart lin = square_free_real_linear_part(mc.primal_mrpf);
    if (lin.has_irrational_real_roots)
        throw IrrationalRealRootError(
            "primal mrpf has irrational real roots; exact reduction cannot proceed");
    for (const auto& [root, mult] : lin.roots)
        if (mult > 1)
            throw MultiplicityViolationError(
                "real root " + root.str() + " of the primal mrpf has multiplicity " +
                std::to_string(mult));

    UnboundedReduction out;
    out.residue = C;
    for (const auto& [root, mult] : lin.roots) {
        RealPolynomial M =
            RealPolynomial(std::vector<Rational>{-root, Rational(1)});
        M = M * M;  // (t - a)^2
        CzeroResult<DualQuaternion> res = czero_checked(out.residue, M);
        if (res.status != CzeroStatus::ok)
            throw InternalDefectError(
                "multiplicity-one real factor produced a pseudofactor");
        out.peeled.insert(out.peeled.begin(), res.zero);
        out.residue = lquo(out.residue, DPoly::linear_from_zero(res.zero));
    }

    if (!(out.reassemble() == C))
        throw InternalDefectError("unbounded reduction failed to reassemble");
    MotionClassification rc = classify_motion(out.residue);
    if (!rc.is_motion || !rc.is_bounded.value_or(false))
        throw InternalDefectError("residue of the unbounded reduction is not bounded");
    return out;
}

LinearFactorization<DualQuaternion> AffineFamily::at(
    const std::vector<Rational>& values) const {
    if (values.size() != parameters.size())
        throw VerificationError("parameter count mismatch in family sample");
    std::vector<DualQuaternion> zeros = base;
    for (std::size_t p = 0; p < parameters.size(); ++p)
        for (std::size_t i = 0; i < zeros.size(); ++i)
            zeros[i].dual = zeros[i].dual + values[p] * directions[p][i];
    LinearFactorization<DualQuaternion> f;
    f.leading = DualQuaternion(1);
    f.zeros = std::move(zeros);
    return f;
}

std::string AffineFamily::str() const {
    std::string out;
    for (std::size_t i = 0; i < base.size(); ++i) {
        out += "(t - (" + to_string(base[i]) + ")";
        for (std::size_t p = 0; p < parameters.size(); ++p)
            if (!directions[p][i].is_zero())
                out += " - " + parameters[p] + "*eps*(" + to_string(directions[p][i]) + ")";
        out += ")";
    }
    return out;
}

namespace {
RationalVector family_base_vector(const AffineFamily& f) {
    RationalVector v;
    for (const DualQuaternion& h : f.base)
        for (const Rational& c : h.dual.components()) v.push_back(c);
    return v;
}

std::vector<RationalVector> family_direction_vectors(const AffineFamily& f) {
    std::vector<RationalVector> out;
    for (const auto& dir : f.directions) {
        RationalVector v;
        for (const Quaternion& q : dir)
            for (const Rational& c : q.components()) v.push_back(c);
        out.push_back(std::move(v));
    }
    return out;
}
} // namespace

bool same_affine_family(const AffineFamily& a, const AffineFamily& b) {
    if (a.base.size() != b.base.size()) return false;
    for (std::size_t i = 0; i < a.base.size(); ++i)
        if (!(a.base[i].primal == b.base[i].primal)) return false;

    auto da = family_direction_vectors(a);
    auto db = family_direction_vectors(b);
    if (!same_span(da, db)) return false;

    RationalVector diff = family_base_vector(a);
    RationalVector vb = family_base_vector(b);
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= vb[i];
    return in_span(da, diff);
}

ProjectionResult factor_by_projection(const DPoly& C,
                                      const LinearFactorization<Quaternion>& primal) {
    if (!C.is_monic()) throw NotMonicError("expected a monic polynomial");
    if (!(primal.leading == Quaternion(1)))
        throw PrimalMismatchError("primal factorization must be monic");
    if (!(primal.expand() == primal_part(C)))
        throw PrimalMismatchError("primal factorization does not expand to the primal part");

    const std::size_t n = primal.zeros.size();
    const QPoly B = dual_part(C);
    if (B.degree() >= static_cast<int>(n) && n > 0)
        throw PrimalMismatchError("dual part degree exceeds the factor count");

    // Prefix and suffix products L_i = prod_{j<i}(t-a_j), R_i = prod_{j>i}.
    std::vector<QPoly> L(n + 1), R(n + 1);
    L[0] = QPoly::one();
    for (std::size_t i = 0; i < n; ++i)
        L[i + 1] = L[i] * QPoly::linear_from_zero(primal.zeros[i]);
    R[n] = QPoly::one();
    for (std::size_t i = n; i-- > 0;)
        R[i] = QPoly::linear_from_zero(primal.zeros[i]) * R[i + 1];

    // Dual part of prod (t - a_i - eps b_i) is -sum L_i b_i R_i; comparing
    // coefficients with B gives 4n equations in the 4n components of the
    // b_i: sum L_i b_i R_i = -B.
    const Quaternion units[4] = {Quaternion(1), Quaternion::unit_i(),
                                 Quaternion::unit_j(), Quaternion::unit_k()};
    RationalMatrix A(4 * n, RationalVector(4 * n, Rational(0)));
    RationalVector rhs(4 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (int u = 0; u < 4; ++u) {
            QPoly col = L[i] * QPoly(units[u]) * R[i + 1];
            for (std::size_t d = 0; d < n; ++d) {
                auto comp = col.coeff(static_cast<int>(d)).components();
                for (int c = 0; c < 4; ++c)
                    A[4 * d + c][4 * i + u] = comp[c];
            }
        }
    }
    for (std::size_t d = 0; d < n; ++d) {
        auto comp = (-B.coeff(static_cast<int>(d))).components();
        for (int c = 0; c < 4; ++c) rhs[4 * d + c] = comp[c];
    }

    LinearSolution sol = solve_linear(std::move(A), std::move(rhs));
    ProjectionResult out;
    if (!sol.consistent) {
        out.status = ProjectionStatus::no_solution;
        return out;
    }

    auto zeros_from = [&](const RationalVector& x) {
        std::vector<DualQuaternion> zeros;
        zeros.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            zeros.emplace_back(primal.zeros[i],
                               Quaternion(x[4 * i], x[4 * i + 1], x[4 * i + 2],
                                          x[4 * i + 3]));
        return zeros;
    };

    if (sol.nullspace.empty()) {
        out.status = ProjectionStatus::unique_solution;
        out.factorization =
            DFact::checked(C, DualQuaternion(1), zeros_from(sol.particular));
        return out;
    }

    out.status = ProjectionStatus::family;
    AffineFamily fam;
    fam.base = zeros_from(sol.particular);
    for (std::size_t p = 0; p < sol.nullspace.size(); ++p) {
        fam.parameters.push_back(std::string(1, static_cast<char>('a' + (p % 26))));
        std::vector<Quaternion> dir;
        dir.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            dir.emplace_back(sol.nullspace[p][4 * i], sol.nullspace[p][4 * i + 1],
                             sol.nullspace[p][4 * i + 2], sol.nullspace[p][4 * i + 3]);
        fam.directions.push_back(std::move(dir));
    }

    // Spot verification: the base and a few parameter assignments must
    // expand back to C exactly.
    std::vector<Rational> zero_vals(fam.parameter_count(), Rational(0));
    if (!verify(C, fam.at(zero_vals)))
        throw InternalDefectError("family base fails verification");
    for (std::size_t p = 0; p < fam.parameter_count(); ++p) {
        std::vector<Rational> vals(fam.parameter_count(), Rational(0));
        vals[p] = Rational(1);
        if (!verify(C, fam.at(vals)))
            throw InternalDefectError("family direction fails verification");
    }
    out.family = std::move(fam);
    return out;
}

} // namespace polyfact
