#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "polyfact/errors.hpp"

namespace polyfact {

using Integer = mpz_class;

// Exact rational scalar.  Thin value wrapper around GMP's mpq_class that
// guarantees the canonical form invariant (reduced, positive denominator)
// on every construction path.  All arithmetic is exact; there is no
// rounding anywhere in this type.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<long int>(n)) {}
    Rational(long long n) : v_(Integer(std::to_string(n))) {}
    Rational(const Integer& n) : v_(n) {}

    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw NotInvertibleError("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    // Accepts "n" or "n/d" with optional sign, base 10.
    static Rational from_string(const std::string& s);

    // Nearest rational with denominator <= max_den, by continued fractions.
    // Used for certified reconstruction of factor coefficients from
    // floating-point root estimates.
    static Rational reconstruct(double x, const Integer& max_den);

    static Rational from_double_exact(double x);

    const Integer numerator() const { return v_.get_num(); }
    const Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw NotInvertibleError("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw NotInvertibleError("inverse of zero rational");
        return Rational(mpq_class(1 / v_));
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    double to_double() const { return v_.get_d(); }

    // "n" when integral, "n/d" otherwise.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

// Dual number a + eps*b with eps^2 = 0.  Invertible iff the real part is
// nonzero.
struct DualNumber {
    Rational re;
    Rational eps;

    DualNumber() = default;
    DualNumber(Rational r, Rational e) : re(std::move(r)), eps(std::move(e)) {}
    explicit DualNumber(Rational r) : re(std::move(r)) {}

    bool is_zero() const { return re.is_zero() && eps.is_zero(); }
    bool is_real() const { return eps.is_zero(); }
    bool is_invertible() const { return !re.is_zero(); }

    DualNumber inverse() const {
        if (!is_invertible())
            throw NotInvertibleError("dual number with zero real part");
        Rational ir = re.inverse();
        return DualNumber(ir, -eps * ir * ir);
    }

    friend DualNumber operator+(const DualNumber& a, const DualNumber& b) {
        return DualNumber(a.re + b.re, a.eps + b.eps);
    }
    friend DualNumber operator-(const DualNumber& a, const DualNumber& b) {
        return DualNumber(a.re - b.re, a.eps - b.eps);
    }
    friend DualNumber operator*(const DualNumber& a, const DualNumber& b) {
        return DualNumber(a.re * b.re, a.re * b.eps + a.eps * b.re);
    }
    friend bool operator==(const DualNumber& a, const DualNumber& b) {
        return a.re == b.re && a.eps == b.eps;
    }
    friend bool operator!=(const DualNumber& a, const DualNumber& b) { return !(a == b); }

    std::string str() const;
};

// Tolerances for the numeric fallback mode of the real-root machinery.
// Exact mode never consults these.
struct FloatContext {
    double epsilon = 1e-10;        // zero test for residuals
    double root_tolerance = 1e-7;  // clustering radius for numeric roots
};

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

} // namespace polyfact
