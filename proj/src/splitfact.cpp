#include "polyfact/splitfact.hpp"

#include <algorithm>

#include "polyfact/linalg.hpp"

namespace polyfact {

namespace {

using SPoly = Polynomial<SplitQuaternion>;
using SFact = LinearFactorization<SplitQuaternion>;

bool rational_sqrt(const Rational& r, Rational& out) {
    if (r.sign() < 0) return false;
    Integer n = r.numerator(), d = r.denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) ||
        !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    out = Rational(sn, sd);
    return true;
}

// Components of s*h as a linear map of the components of h.
RationalMatrix left_mult_matrix(const SplitQuaternion& s) {
    const SplitQuaternion units[4] = {SplitQuaternion(1), SplitQuaternion::unit_i(),
                                      SplitQuaternion::unit_j(),
                                      SplitQuaternion::unit_k()};
    RationalMatrix A(4, RationalVector(4, Rational(0)));
    for (int c = 0; c < 4; ++c) {
        auto col = (s * units[c]).components();
        for (int r = 0; r < 4; ++r) A[r][c] = col[r];
    }
    return A;
}

SplitQuaternion from_components(const RationalVector& v) {
    return {v[0], v[1], v[2], v[3]};
}

Rational split_inner(const SplitQuaternion& a, const SplitQuaternion& b) {
    return a.w * b.w - a.x * b.x - a.y * b.y + a.z * b.z;
}

// Both orderings of a conjugate pair; identical tuples collapse later.
void push_pair(std::vector<SFact>& out, const SPoly& C, const SplitQuaternion& z1,
               const SplitQuaternion& z2) {
    out.push_back(SFact::checked(C, SplitQuaternion(1), {z1, z2}));
    if (!(z1 == z2)) out.push_back(SFact::checked(C, SplitQuaternion(1), {z2, z1}));
}

// C equals the real quadratic M: factor over the subalgebra <1, ks> ~ C or
// over the reals.
bool real_factor_branch(const SPoly& C, const RealPolynomial& M,
                        std::vector<SFact>& out, std::string& why) {
    Rational p = M.coeff(1), q = M.coeff(0);
    Rational disc = p * p - Rational(4) * q;
    Rational half_p = p / Rational(2);
    if (disc.is_zero()) {
        SplitQuaternion r(-half_p);
        out.push_back(SFact::checked(C, SplitQuaternion(1), {r, r}));
        return true;
    }
    if (disc.sign() > 0) {
        Rational d;
        if (!rational_sqrt(disc, d)) {
            why = "irrational real roots of real factor";
            return false;
        }
        SplitQuaternion r1((-p + d) / Rational(2)), r2((-p - d) / Rational(2));
        push_pair(out, C, r1, r2);
        return true;
    }
    Rational y2 = q - half_p * half_p, y;
    if (!rational_sqrt(y2, y)) {
        why = "irrational imaginary part over <1, ks>";
        return false;
    }
    SplitQuaternion z(-half_p, Rational(0), Rational(0), y);
    push_pair(out, C, z, conj(z));
    return true;
}

// Common right zero of M and S when S parameterizes a null line.  Uses the
// ruling parameterization a = 1 + cos(phi) is + sin(phi) js,
// b = -sin(phi) is + cos(phi) js - ks (right family) after shifting M to
// t^2 + m; everything stays rational.
enum class NullLineOutcome { factored, no_right_zero, unresolved };

NullLineOutcome null_line_zero(const SPoly& C, const RealPolynomial& M,
                               const SPoly& S, std::vector<SFact>& out,
                               std::string& why) {
    SplitQuaternion s1 = S.coeff(1), s0 = S.coeff(0);
    if (s1.is_zero()) {
        why = "constant nonzero remainder has no zeros";
        return NullLineOutcome::no_right_zero;
    }

    // Right zeros of S solve the 4x4 real linear system s1 h = -s0.
    auto neg_s0 = (-s0).components();
    LinearSolution zs = solve_linear(left_mult_matrix(s1),
                                     RationalVector(neg_s0.begin(), neg_s0.end()));
    if (!zs.consistent) {
        why = "S has no right zeros (line in the left ruling family)";
        return NullLineOutcome::no_right_zero;
    }

    Rational p = M.coeff(1), q = M.coeff(0);
    Rational u = -(p / Rational(2));
    Rational m = q - (p * p) / Rational(4);  // shifted M is t^2 + m

    SplitQuaternion s0s = s1 * SplitQuaternion(u) + s0;  // shifted constant term

    Rational a1 = s1.w, b1 = -s1.z;
    Rational a0 = s0s.w, b0 = -s0s.z;
    Rational D = Rational(2) * (a0 * b1 - a1 * b0);

    if (!D.is_zero()) {
        // Ruling angle from s1 (never zero here and nu(s1) = 0 forces
        // cos^2 + sin^2 = 1).
        Rational A2 = a1 * a1 + b1 * b1;
        if (A2.is_zero()) {
            why = "degenerate ruling decomposition";
            return NullLineOutcome::unresolved;
        }
        Rational cosv = (a1 * s1.x + b1 * s1.y) / A2;
        Rational sinv = (a1 * s1.y - b1 * s1.x) / A2;
        // A consistent system puts the line in the right ruling family, so
        // the e = -1 decomposition must certify.
        if (!(cosv * cosv + sinv * sinv).is_one() ||
            !(a0 * cosv - b0 * sinv == s0s.x) || !(a0 * sinv + b0 * cosv == s0s.y))
            throw InternalDefectError("right-family ruling decomposition failed");

        Rational h1 = ((a1 * a1 - b1 * b1) * m + a0 * a0 - b0 * b0) * sinv +
                      Rational(2) * (a1 * b1 * m + a0 * b0) * cosv;
        Rational h2 = ((b1 * b1 - a1 * a1) * m - a0 * a0 + b0 * b0) * cosv +
                      Rational(2) * (a1 * b1 * m + a0 * b0) * sinv;
        Rational h3 = -a0 * a0 - b0 * b0 - (a1 * a1 + b1 * b1) * m;
        Rational Di = D.inverse();
        SplitQuaternion ht(Rational(0), h1 * Di, h2 * Di, h3 * Di);

        SplitQuaternion h = ht + SplitQuaternion(u);
        if (!eval_right(S, h).is_zero() ||
            !eval_right(promote<SplitQuaternion>(M), h).is_zero() ||
            !lrem(C, SPoly::linear_from_zero(h)).is_zero())
            throw InternalDefectError("closed-form null-line zero failed verification");
        SPoly g = lquo(C, SPoly::linear_from_zero(h));
        out.push_back(SFact::checked(C, SplitQuaternion(1), {-g.coeff(0), h}));
        return NullLineOutcome::factored;
    }

    // Degenerate line (s0 and s1 linearly dependent).  Search the affine
    // solution set of S(h) = 0 for a root of M directly: scalar part is
    // pinned to -p/2 and nu(h) = q remains as one quadratic condition.
    SplitQuaternion base = from_components(zs.particular);
    std::vector<SplitQuaternion> dirs;
    for (const auto& v : zs.nullspace) dirs.push_back(from_components(v));

    // Eliminate one parameter with the linear constraint scalar(h) = -p/2.
    Rational target_w = -(p / Rational(2));
    std::size_t piv = dirs.size();
    for (std::size_t i = 0; i < dirs.size(); ++i)
        if (!dirs[i].w.is_zero()) { piv = i; break; }
    if (piv == dirs.size()) {
        if (!(base.w == target_w)) {
            why = "no zero of S has the scalar part required by M";
            return NullLineOutcome::no_right_zero;
        }
    } else {
        Rational f = (target_w - base.w) / dirs[piv].w;
        base = base + dirs[piv] * f;
        SplitQuaternion pd = dirs[piv];
        std::vector<SplitQuaternion> rest;
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            if (i == piv) continue;
            rest.push_back(dirs[i] - pd * (dirs[i].w / pd.w));
        }
        dirs = std::move(rest);
    }

    auto try_candidate = [&](const SplitQuaternion& h) -> bool {
        if (!eval_right(S, h).is_zero()) return false;
        if (!eval_right(promote<SplitQuaternion>(M), h).is_zero()) return false;
        if (!lrem(C, SPoly::linear_from_zero(h)).is_zero()) return false;
        SPoly g = lquo(C, SPoly::linear_from_zero(h));
        out.push_back(SFact::checked(C, SplitQuaternion(1), {-g.coeff(0), h}));
        return true;
    };

    // nu(base + c v) = nu(base) + 2c <base,v> + c^2 nu(v) = q.
    auto solve_along = [&](const SplitQuaternion& b, const SplitQuaternion& v) -> bool {
        Rational A = norm(v);
        Rational B = Rational(2) * split_inner(b, v);
        Rational Cc = norm(b) - q;
        if (A.is_zero()) {
            if (B.is_zero()) return Cc.is_zero() && try_candidate(b);
            return try_candidate(b + v * (-(Cc / B)));
        }
        Rational disc = B * B - Rational(4) * A * Cc, d;
        if (!rational_sqrt(disc, d)) return false;
        for (const Rational& c : {(-B + d) / (Rational(2) * A),
                                  (-B - d) / (Rational(2) * A)})
            if (try_candidate(b + v * c)) return true;
        return false;
    };

    if (dirs.empty()) {
        if (norm(base) == q && try_candidate(base)) return NullLineOutcome::factored;
        why = "the unique zero of S is not a zero of M";
        return NullLineOutcome::no_right_zero;
    }
    if (dirs.size() == 1) {
        if (solve_along(base, dirs[0])) return NullLineOutcome::factored;
        why = "no rational zero of M on the degenerate solution line";
        return NullLineOutcome::unresolved;
    }
    for (const Rational& c2 : {Rational(0), Rational(1), Rational(-1), Rational(2)})
        if (solve_along(base + dirs[1] * c2, dirs[0])) return NullLineOutcome::factored;
    why = "degenerate two-parameter zero set; no rational point found";
    return NullLineOutcome::unresolved;
}

} // namespace

QuadraticSplitResult factor_quadratic_split(const SPoly& C) {
    if (C.degree() != 2) throw NonRealFactorNormError("expected a quadratic polynomial");
    if (!C.is_monic()) throw NotMonicError("expected a monic polynomial");

    auto nu = is_real_norm(C);
    if (!nu) throw InternalDefectError("split quaternion norm polynomial must be real");

    QuadraticSplitResult res;

    RationalMatrix coeff_rows;
    for (int i = 0; i <= 2; ++i) {
        auto c = C.coeff(i).components();
        coeff_rows.push_back(RationalVector(c.begin(), c.end()));
    }
    res.coefficients_independent = matrix_rank(coeff_rows) == 3;

    RealFactorization F = factor_real(*nu);

    // Completeness of the exhaustion argument: the rational quadratic
    // divisors enumerated below cover *all* real quadratic divisors of
    // nu(C) iff the real roots admit no irrational pairing.
    int rational_real = 0, irrational_blocks = 0, irrational_block_mult = 0;
    for (const auto& [r, mlt] : F.linear) rational_real += mlt;
    for (const QuadraticBlock& b : F.quadratics)
        if (!b.irreducible) {
            ++irrational_blocks;
            irrational_block_mult = b.multiplicity;
        }
    if (irrational_blocks == 0)
        res.certificate_complete = true;
    else
        res.certificate_complete =
            irrational_blocks == 1 && irrational_block_mult == 1 && rational_real == 0;

    for (const QuadraticChoice& choice : quadratic_choices(F)) {
        SPoly S = lrem(C, promote<SplitQuaternion>(choice.M));
        SplitAttempt att;
        att.M = choice.M;

        if (S.is_zero()) {
            att.branch = "real-factor";
            std::string why;
            att.success = real_factor_branch(C, choice.M, res.factorizations, why);
            att.detail = att.success ? "C equals the real quadratic M" : why;
            if (!att.success) res.certificate_complete = false;
        } else if (!norm_poly(S).is_zero()) {
            att.branch = "czero";
            CzeroResult<SplitQuaternion> cz = czero_checked(C, choice.M);
            if (cz.status == CzeroStatus::ok) {
                SPoly g = lquo(C, SPoly::linear_from_zero(cz.zero));
                res.factorizations.push_back(
                    SFact::checked(C, SplitQuaternion(1), {-g.coeff(0), cz.zero}));
                att.success = true;
                att.detail = "right factor t - (" + to_string(cz.zero) + ")";
            } else {
                att.success = false;
                att.detail = czero_status_name(cz.status);
                res.certificate_complete = false;
            }
        } else {
            att.branch = "null-line";
            std::string why;
            NullLineOutcome o = null_line_zero(C, choice.M, S, res.factorizations, why);
            att.success = o == NullLineOutcome::factored;
            att.detail = att.success ? "right zero on the null line" : why;
            if (o == NullLineOutcome::unresolved) res.certificate_complete = false;
        }
        res.attempts.push_back(std::move(att));
    }

    std::sort(res.factorizations.begin(), res.factorizations.end());
    res.factorizations.erase(
        std::unique(res.factorizations.begin(), res.factorizations.end()),
        res.factorizations.end());

    if (res.coefficients_independent && !res.found())
        throw InternalDefectError(
            "linearly independent coefficients guarantee a factorization");
    return res;
}

} // namespace polyfact
