#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyfact/polynomial.hpp"

namespace polyfact {

enum class FactorMode { exact, numeric };

// A monic quadratic factor t^2 + b t + c.  irreducible = negative
// discriminant; otherwise the block is a certified pairing of two
// irrational real roots whose symmetric functions are rational (e.g.
// t^2 - 2).
struct QuadraticBlock {
    Rational b;
    Rational c;
    int multiplicity = 1;
    bool irreducible = true;

    RealPolynomial poly() const {
        return RealPolynomial(std::vector<Rational>{c, b, Rational(1)});
    }
    Rational discriminant() const { return b * b - Rational(4) * c; }
};

// Factorization of a real polynomial into rational linear roots and
// rational quadratic blocks.  In exact mode the product of all factors
// times the unit reconstructs the input exactly; numeric mode additionally
// records the reconstruction error polynomial.
struct RealFactorization {
    Rational unit = Rational(1);
    std::vector<std::pair<Rational, int>> linear;  // (root, multiplicity)
    std::vector<QuadraticBlock> quadratics;
    std::optional<RealPolynomial> residual;  // numeric mode only
    FactorMode mode = FactorMode::exact;

    RealPolynomial reconstruct() const;
    int real_root_count() const;  // with multiplicity, exact-mode factors only
};

// A monic quadratic divisor of the target polynomial, as consumed by the
// factorization algorithm.
struct QuadraticChoice {
    RealPolynomial M;
    std::string provenance;
};

// Splits P into linear and quadratic factors.  Exact mode: rational roots
// and rational quadratic blocks are certified by exact division; raises
// ExactFactorizationUnsupported when an irreducible factor of degree > 2
// (or a quadratic with irrational coefficients) remains.  Numeric mode:
// roots are clustered within ctx.root_tolerance and the residual recorded.
RealFactorization factor_real(const RealPolynomial& P,
                              FactorMode mode = FactorMode::exact,
                              const FloatContext& ctx = FloatContext{});

// All monic quadratic divisors of the factored polynomial over Q: each
// quadratic block and each multiplicity-respecting pairing of two linear
// roots, deduplicated and canonically ordered.
std::vector<QuadraticChoice> quadratic_choices(const RealFactorization& F);

// Monic exact gcd.  Errors if both arguments are zero.
RealPolynomial real_gcd(const RealPolynomial& P, const RealPolynomial& Q);

// Number of distinct real roots by Sturm's theorem.
int count_real_roots(const RealPolynomial& P);

bool has_real_root(const RealPolynomial& P);

struct RealLinearPart {
    std::vector<std::pair<Rational, int>> roots;  // rational roots + multiplicities
    bool has_irrational_real_roots = false;
};

// Rational real roots of P with exact multiplicities; flags irrational
// real roots separately (they block the exact unbounded reduction).
RealLinearPart square_free_real_linear_part(const RealPolynomial& P);

// Numeric roots of P (double precision, companion-matrix eigenvalues).
std::vector<std::pair<double, double>> numeric_roots(const RealPolynomial& P);

} // namespace polyfact
