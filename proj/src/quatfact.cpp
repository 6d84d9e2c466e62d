#include "polyfact/quatfact.hpp"

#include <algorithm>

namespace polyfact {

namespace {
using QPoly = Polynomial<Quaternion>;
using QFact = LinearFactorization<Quaternion>;
} // namespace

QuaternionFactorizations quaternion_factorizations(const QPoly& C) {
    if (C.is_zero() || C.degree() < 1)
        throw ZeroPolynomialError("factorization needs degree >= 1");
    if (!C.is_monic()) throw NotMonicError("expected a monic polynomial");

    QuaternionFactorizations out;
    out.real_part = mrpf(C);
    out.g_part = lquo(C, promote<Quaternion>(out.real_part));

    RealFactorization F = factor_real(out.real_part);
    out.real_roots = F.linear;
    for (const QuadraticBlock& b : F.quadratics) {
        if (!b.irreducible)
            throw ExactFactorizationUnsupportedError(
                "real part has an irrational real quadratic factor; its complex "
                "roots are not rational");
        // t^2 + bt + c = (t - x)^2 + y^2 with x = -b/2, y = sqrt(c - b^2/4).
        Rational x = -(b.b / Rational(2));
        Rational y2 = b.c - x * x;
        Integer n = y2.numerator(), d = y2.denominator();
        if (!mpz_perfect_square_p(n.get_mpz_t()) ||
            !mpz_perfect_square_p(d.get_mpz_t()))
            throw ExactFactorizationUnsupportedError(
                "sphere family radius is irrational for " + to_string(b.poly()));
        Integer sn, sd;
        mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
        out.sphere_families.push_back({x, Rational(sn, sd), b.multiplicity});
    }

    if (out.g_part.degree() >= 1) {
        out.g_factorizations = all_factorizations(out.g_part);
    } else {
        // G = 1: the empty factorization.
        QFact empty;
        out.g_factorizations.factorizations.push_back(empty);
    }
    return out;
}

std::vector<QFact> canonical_factor_tuples(const QuaternionFactorizations& qf,
                                           const QPoly& C, std::size_t limit) {
    // All real-part representatives live in <1, i> and commute pairwise,
    // so every permutation multiplies back to mrpf C.
    std::vector<Quaternion> f_factors;
    for (const auto& [root, mult] : qf.real_roots)
        for (int i = 0; i < mult; ++i) f_factors.emplace_back(root);
    for (const SphereFamily& s : qf.sphere_families) {
        for (int i = 0; i < s.multiplicity; ++i) {
            f_factors.push_back(s.representative());
            f_factors.push_back(conj(s.representative()));
        }
    }
    std::sort(f_factors.begin(), f_factors.end());

    std::vector<QFact> out;
    do {
        for (const QFact& g : qf.g_factorizations.factorizations) {
            std::vector<Quaternion> zeros = f_factors;
            zeros.insert(zeros.end(), g.zeros.begin(), g.zeros.end());
            out.push_back(QFact::checked(C, Quaternion(1), std::move(zeros)));
            if (out.size() >= limit) return out;
        }
    } while (std::next_permutation(f_factors.begin(), f_factors.end()));
    return out;
}

} // namespace polyfact
