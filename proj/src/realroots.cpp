#include "polyfact/realroots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "polyfact/print.hpp"

namespace polyfact {

namespace {

const Integer kReconstructDenBound("1000000000000");

RealPolynomial linear_factor(const Rational& root) {
    return RealPolynomial(std::vector<Rational>{-root, Rational(1)});
}

// Yun's square-free decomposition of a monic polynomial: returns pairs
// (a_i, i) with P = prod a_i^i, the a_i square-free and pairwise coprime.
std::vector<std::pair<RealPolynomial, int>> squarefree_decomposition(
    const RealPolynomial& P) {
    std::vector<std::pair<RealPolynomial, int>> out;
    if (P.degree() <= 0) return out;

    RealPolynomial f = monic(P);
    RealPolynomial fp = derivative(f);
    RealPolynomial g = poly_gcd(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    RealPolynomial c = lquo(f, g);
    RealPolynomial d = lquo(fp, g) - derivative(c);
    int i = 1;
    while (c.degree() > 0) {
        RealPolynomial a = poly_gcd(c, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        c = lquo(c, a);
        d = lquo(d, a) - derivative(c);
        ++i;
    }
    return out;
}

int sign_at_plus_infinity(const RealPolynomial& P) {
    return P.is_zero() ? 0 : P.leading().sign();
}

int sign_at_minus_infinity(const RealPolynomial& P) {
    if (P.is_zero()) return 0;
    int s = P.leading().sign();
    return (P.degree() % 2 == 0) ? s : -s;
}

int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// Attempts to certify the monic quadratic with the given approximate
// coefficients as an exact divisor of target; on success divides it out.
std::optional<QuadraticBlock> certify_quadratic(RealPolynomial& target,
                                                double b_approx, double c_approx,
                                                bool irreducible) {
    Rational b = Rational::reconstruct(b_approx, kReconstructDenBound);
    Rational c = Rational::reconstruct(c_approx, kReconstructDenBound);
    QuadraticBlock blk{b, c, 1, irreducible};
    RealPolynomial M = blk.poly();
    if (!divides_exactly(M, target)) return std::nullopt;
    target = lquo(target, M);
    return blk;
}

} // namespace

RealPolynomial RealFactorization::reconstruct() const {
    RealPolynomial prod(unit);
    for (const auto& [root, m] : linear)
        for (int i = 0; i < m; ++i) prod = prod * linear_factor(root);
    for (const QuadraticBlock& q : quadratics)
        for (int i = 0; i < q.multiplicity; ++i) prod = prod * q.poly();
    return prod;
}

int RealFactorization::real_root_count() const {
    int n = 0;
    for (const auto& [root, m] : linear) n += m;
    for (const QuadraticBlock& q : quadratics)
        if (!q.irreducible) n += 2 * q.multiplicity;
    return n;
}

std::vector<std::pair<double, double>> numeric_roots(const RealPolynomial& P) {
    std::vector<std::pair<double, double>> roots;
    int n = P.degree();
    if (n <= 0) return roots;

    // Companion matrix of the monic normalization.
    Rational lead = P.leading();
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i)
        C(i, n - 1) = -(P.coeff(i) / lead).to_double();

    Eigen::EigenSolver<Eigen::MatrixXd> solver(C);
    for (int i = 0; i < n; ++i)
        roots.emplace_back(solver.eigenvalues()[i].real(),
                           solver.eigenvalues()[i].imag());
    std::sort(roots.begin(), roots.end());
    return roots;
}

RealFactorization factor_real(const RealPolynomial& P, FactorMode mode,
                              const FloatContext& ctx) {
    if (P.is_zero()) throw ZeroPolynomialError("factor_real of the zero polynomial");

    RealFactorization F;
    F.mode = mode;
    F.unit = P.leading();
    if (P.degree() == 0) return F;

    if (mode == FactorMode::numeric) {
        auto roots = numeric_roots(P);
        // Cluster and pair conjugates within the tolerance.
        std::vector<bool> used(roots.size(), false);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (used[i]) continue;
            auto [re, im] = roots[i];
            if (std::abs(im) <= ctx.root_tolerance) {
                int mult = 1;
                used[i] = true;
                for (std::size_t j = i + 1; j < roots.size(); ++j) {
                    if (used[j]) continue;
                    if (std::abs(roots[j].second) <= ctx.root_tolerance &&
                        std::abs(roots[j].first - re) <= ctx.root_tolerance) {
                        used[j] = true;
                        ++mult;
                    }
                }
                F.linear.emplace_back(Rational::from_double_exact(re), mult);
            } else if (im > 0) {
                used[i] = true;
                for (std::size_t j = 0; j < roots.size(); ++j) {
                    if (used[j]) continue;
                    if (std::abs(roots[j].first - re) <= ctx.root_tolerance &&
                        std::abs(roots[j].second + im) <= ctx.root_tolerance) {
                        used[j] = true;
                        break;
                    }
                }
                F.quadratics.push_back(
                    {Rational::from_double_exact(-2.0 * re),
                     Rational::from_double_exact(re * re + im * im), 1, true});
            } else {
                used[i] = true;  // conjugate handled with its partner
            }
        }
        F.residual = P - F.reconstruct();
        return F;
    }

    // Exact mode: square-free decomposition first, so the numeric stage
    // only ever sees simple roots.
    for (const auto& [sf, mult] : squarefree_decomposition(P)) {
        RealPolynomial rem = sf;

        // Rational roots, certified by exact division.
        bool progress = true;
        while (progress && rem.degree() > 0) {
            progress = false;
            for (const auto& [re, im] : numeric_roots(rem)) {
                if (std::abs(im) > 1e-8) continue;
                Rational cand = Rational::reconstruct(re, kReconstructDenBound);
                if (divides_exactly(linear_factor(cand), rem)) {
                    rem = lquo(rem, linear_factor(cand));
                    F.linear.emplace_back(cand, mult);
                    progress = true;
                    break;
                }
            }
        }

        if (rem.degree() == 0) continue;

        // Remaining roots are irrational: pair complex conjugates, then
        // pair leftover real roots whose symmetric functions certify.
        auto roots = numeric_roots(rem);
        std::vector<double> reals;
        for (const auto& [re, im] : roots) {
            if (im > 1e-8) {
                auto blk = certify_quadratic(rem, -2.0 * re, re * re + im * im, true);
                if (blk) {
                    blk->multiplicity = mult;
                    F.quadratics.push_back(*blk);
                }
            } else if (std::abs(im) <= 1e-8) {
                reals.push_back(re);
            }
        }
        std::vector<bool> used(reals.size(), false);
        for (std::size_t i = 0; i < reals.size(); ++i) {
            if (used[i]) continue;
            for (std::size_t j = i + 1; j < reals.size(); ++j) {
                if (used[j]) continue;
                auto blk = certify_quadratic(rem, -(reals[i] + reals[j]),
                                             reals[i] * reals[j], false);
                if (blk) {
                    blk->multiplicity = mult;
                    F.quadratics.push_back(*blk);
                    used[i] = used[j] = true;
                    break;
                }
            }
        }

        if (rem.degree() != 0)
            throw ExactFactorizationUnsupportedError(
                "irreducible factor without rational quadratic split: " +
                to_string(rem));
    }

    std::sort(F.linear.begin(), F.linear.end());
    std::sort(F.quadratics.begin(), F.quadratics.end(),
              [](const QuadraticBlock& a, const QuadraticBlock& b) {
                  return std::pair(a.b, a.c) < std::pair(b.b, b.c);
              });

    if (!(F.reconstruct() == P))
        throw InternalDefectError("exact factorization failed to reconstruct input");
    return F;
}

std::vector<QuadraticChoice> quadratic_choices(const RealFactorization& F) {
    std::vector<QuadraticChoice> out;
    RealPolynomial target = F.reconstruct();

    for (const QuadraticBlock& q : F.quadratics) {
        out.push_back({q.poly(), q.irreducible ? "irreducible quadratic"
                                               : "irrational real pair"});
    }
    for (std::size_t i = 0; i < F.linear.size(); ++i) {
        for (std::size_t j = i; j < F.linear.size(); ++j) {
            if (i == j && F.linear[i].second < 2) continue;
            RealPolynomial M =
                linear_factor(F.linear[i].first) * linear_factor(F.linear[j].first);
            out.push_back({M, "roots " + F.linear[i].first.str() + ", " +
                                  F.linear[j].first.str()});
        }
    }

    std::sort(out.begin(), out.end(), [](const QuadraticChoice& a,
                                         const QuadraticChoice& b) {
        return a.M.coefficients() < b.M.coefficients();
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const QuadraticChoice& a, const QuadraticChoice& b) {
                              return a.M == b.M;
                          }),
              out.end());

    for (const QuadraticChoice& q : out)
        if (!divides_exactly(q.M, target))
            throw InternalDefectError("quadratic choice does not divide the target");
    return out;
}

RealPolynomial real_gcd(const RealPolynomial& P, const RealPolynomial& Q) {
    if (P.is_zero() && Q.is_zero())
        throw ZeroPolynomialError("gcd of two zero polynomials");
    return poly_gcd(P, Q);
}

int count_real_roots(const RealPolynomial& P) {
    if (P.is_zero()) throw ZeroPolynomialError("root count of the zero polynomial");
    if (P.degree() == 0) return 0;

    // Sturm chain; counts distinct real roots regardless of multiplicity.
    std::vector<RealPolynomial> chain{monic(P), derivative(monic(P))};
    while (!chain.back().is_zero()) {
        const RealPolynomial& a = chain[chain.size() - 2];
        const RealPolynomial& b = chain.back();
        chain.push_back(-lrem(a, b));
    }
    chain.pop_back();

    std::vector<int> lo, hi;
    lo.reserve(chain.size());
    hi.reserve(chain.size());
    for (const RealPolynomial& f : chain) {
        lo.push_back(sign_at_minus_infinity(f));
        hi.push_back(sign_at_plus_infinity(f));
    }
    return sign_variations(lo) - sign_variations(hi);
}

bool has_real_root(const RealPolynomial& P) { return count_real_roots(P) > 0; }

RealLinearPart square_free_real_linear_part(const RealPolynomial& P) {
    if (P.is_zero()) throw ZeroPolynomialError("linear part of the zero polynomial");
    RealLinearPart out;
    for (const auto& [sf, mult] : squarefree_decomposition(P)) {
        RealPolynomial rem = sf;
        bool progress = true;
        while (progress && rem.degree() > 0) {
            progress = false;
            for (const auto& [re, im] : numeric_roots(rem)) {
                if (std::abs(im) > 1e-8) continue;
                Rational cand = Rational::reconstruct(re, kReconstructDenBound);
                if (divides_exactly(linear_factor(cand), rem)) {
                    rem = lquo(rem, linear_factor(cand));
                    out.roots.emplace_back(cand, mult);
                    progress = true;
                    break;
                }
            }
        }
        if (rem.degree() > 0 && count_real_roots(rem) > 0)
            out.has_irrational_real_roots = true;
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

} // namespace polyfact
