#include "polyfact/polynomial.hpp"

namespace polyfact {

RealPolynomial monic(const RealPolynomial& P) {
    if (P.is_zero()) return P;
    return P.leading().inverse() * P;
}

RealPolynomial poly_gcd(RealPolynomial A, RealPolynomial B) {
    while (!B.is_zero()) {
        RealPolynomial r = lrem(A, B);
        A = B;
        B = r;
    }
    return monic(A);
}

RealPolynomial derivative(const RealPolynomial& P) {
    if (P.degree() <= 0) return RealPolynomial();
    std::vector<Rational> r;
    r.reserve(P.degree());
    for (int i = 1; i <= P.degree(); ++i) r.push_back(Rational(i) * P.coeff(i));
    return RealPolynomial(std::move(r));
}

bool divides_exactly(const RealPolynomial& divisor, const RealPolynomial& P) {
    if (divisor.is_zero()) return P.is_zero();
    return lrem(P, divisor).is_zero();
}

} // namespace polyfact
