#include "polyfact/rational.hpp"

#include <cmath>
#include <ostream>

namespace polyfact {

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("invalid rational literal '" + s + "'", 0);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::from_double_exact(double x) {
    mpq_class q(x);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::reconstruct(double x, const Integer& max_den) {
    if (!std::isfinite(x))
        throw ExactFactorizationUnsupportedError("non-finite value in reconstruction");

    bool neg = x < 0;
    double a = neg ? -x : x;

    // Continued fraction convergents p/q of a, stopping when the
    // denominator bound is exceeded.  The last convergent within bounds is
    // the best rational approximation with denominator <= max_den.
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = a;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 9.0e18) break;
        Integer ai(std::to_string(static_cast<long long>(fl)));
        Integer p2 = ai * p1 + p0;
        Integer q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15 * std::max(1.0, frac)) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    return neg ? -r : r;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

std::string DualNumber::str() const {
    if (eps.is_zero()) return re.str();
    return re.str() + " + eps*(" + eps.str() + ")";
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

} // namespace polyfact
