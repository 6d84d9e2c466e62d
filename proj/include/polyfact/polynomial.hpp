#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "polyfact/algebra.hpp"
#include "polyfact/errors.hpp"

namespace polyfact {

// Left polynomial over an algebra T: coefficients are written to the left
// of the indeterminate and multiplication convolves them without commuting
// past t.  Coefficient storage is dense, index = power of t, trailing
// zeros trimmed.  The zero polynomial has an empty coefficient list and
// degree -1.
template <class T>
class Polynomial {
public:
    using Coefficient = T;

    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    explicit Polynomial(const T& constant) : c_{constant} { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() {
        return Polynomial(AlgebraTraits<T>::from_rational(Rational(1)));
    }

    static Polynomial monomial(const T& coeff, int power) {
        std::vector<T> c(power + 1, AlgebraTraits<T>::from_rational(Rational(0)));
        c[power] = coeff;
        return Polynomial(std::move(c));
    }

    // t - h
    static Polynomial linear_from_zero(const T& h) {
        return Polynomial(std::vector<T>{-h, AlgebraTraits<T>::from_rational(Rational(1))});
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<T>& coefficients() const { return c_; }

    // Coefficient of t^i, zero when out of range.
    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return AlgebraTraits<T>::from_rational(Rational(0));
        return c_[static_cast<std::size_t>(i)];
    }

    const T& leading() const {
        if (is_zero()) throw ZeroPolynomialError("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const {
        return !is_zero() && leading() == AlgebraTraits<T>::from_rational(Rational(1));
    }

    bool is_constant() const { return degree() <= 0; }

    Polynomial operator-() const {
        std::vector<T> r;
        r.reserve(c_.size());
        for (const T& x : c_) r.push_back(-x);
        return Polynomial(std::move(r));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()),
                         AlgebraTraits<T>::from_rational(Rational(0)));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + (-b);
    }

    // Noncommutative convolution; factor order is preserved.
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1,
                         AlgebraTraits<T>::from_rational(Rational(0)));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const T& s, const Polynomial& a) {
        std::vector<T> r;
        r.reserve(a.c_.size());
        for (const T& x : a.c_) r.push_back(s * x);
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const T& s) {
        std::vector<T> r;
        r.reserve(a.c_.size());
        for (const T& x : a.c_) r.push_back(x * s);
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& a) {
        std::vector<T> r;
        r.reserve(a.c_.size());
        for (const T& x : a.c_) r.push_back(s * x);
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            if (a.c_[i] < b.c_[i]) return true;
            if (b.c_[i] < a.c_[i]) return false;
        }
        return false;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<T> c_;
};

using RealPolynomial = Polynomial<Rational>;

// --- Evaluation -------------------------------------------------------------

// Right evaluation C(r) = sum c_i r^i (coefficients stay on the left).
// Additive in C but not multiplicative.
template <class T>
T eval_right(const Polynomial<T>& C, const T& r) {
    T acc = AlgebraTraits<T>::from_rational(Rational(0));
    for (int i = C.degree(); i >= 0; --i) acc = acc * r + C.coeff(i);
    return acc;
}

// Left evaluation sum r^i c_i.
template <class T>
T eval_left(const Polynomial<T>& C, const T& r) {
    T acc = AlgebraTraits<T>::from_rational(Rational(0));
    for (int i = C.degree(); i >= 0; --i) acc = r * acc + C.coeff(i);
    return acc;
}

// Evaluation at a real parameter value.
template <class T>
T eval_scalar(const Polynomial<T>& C, const Rational& t) {
    T acc = AlgebraTraits<T>::from_rational(Rational(0));
    for (int i = C.degree(); i >= 0; --i) acc = t * acc + C.coeff(i);
    return acc;
}

// --- Division ---------------------------------------------------------------

enum class DivisionSide { left, right };

// F = Q G + S (left) or F = G Q + S (right) with deg S < deg G.  The
// identity is re-verified on construction.
template <class T>
struct DivisionResult {
    Polynomial<T> quotient;
    Polynomial<T> remainder;
    DivisionSide side;
};

// Euclidean division.  Requires an invertible leading coefficient of G;
// outside that regime neither existence nor uniqueness holds and callers
// must transform the problem first (e.g. with moebius).
template <class T>
DivisionResult<T> divide(const Polynomial<T>& F, const Polynomial<T>& G,
                         DivisionSide side) {
    if (G.is_zero())
        throw ZeroPolynomialError("division by the zero polynomial");
    auto ginv = try_inverse(G.leading());
    if (!ginv)
        throw LeadingCoefficientNotInvertibleError(
            "leading coefficient of divisor is not invertible");

    const T& gi = *ginv;
    const T& g = G.leading();

    // Normalize to a monic divisor: F0 = F g^-1, G0 = G g^-1 for the left
    // version, multiply from the left for the right version.
    Polynomial<T> F0 = (side == DivisionSide::left) ? F * gi : gi * F;
    Polynomial<T> G0 = (side == DivisionSide::left) ? G * gi : gi * G;

    Polynomial<T> Q;
    Polynomial<T> S = F0;
    int n = G0.degree();
    while (!S.is_zero() && S.degree() >= n) {
        T r = S.leading();
        int k = S.degree() - n;
        Q = Q + Polynomial<T>::monomial(r, k);
        if (side == DivisionSide::left)
            S = S - Polynomial<T>::monomial(r, k) * G0;
        else
            S = S - G0 * Polynomial<T>::monomial(r, k);
    }

    DivisionResult<T> res;
    res.side = side;
    res.quotient = Q;
    res.remainder = (side == DivisionSide::left) ? S * g : g * S;

    Polynomial<T> check = (side == DivisionSide::left) ? Q * G + res.remainder
                                                       : G * Q + res.remainder;
    if (!(check == F))
        throw InternalDefectError("division identity failed to verify");
    return res;
}

template <class T>
Polynomial<T> lquo(const Polynomial<T>& F, const Polynomial<T>& G) {
    return divide(F, G, DivisionSide::left).quotient;
}
template <class T>
Polynomial<T> lrem(const Polynomial<T>& F, const Polynomial<T>& G) {
    return divide(F, G, DivisionSide::left).remainder;
}
template <class T>
Polynomial<T> rquo(const Polynomial<T>& F, const Polynomial<T>& G) {
    return divide(F, G, DivisionSide::right).quotient;
}
template <class T>
Polynomial<T> rrem(const Polynomial<T>& F, const Polynomial<T>& G) {
    return divide(F, G, DivisionSide::right).remainder;
}

// --- Involution and norm ----------------------------------------------------

// Coefficientwise involution gamma.
template <class T>
Polynomial<T> conj_poly(const Polynomial<T>& C) {
    std::vector<T> r;
    r.reserve(C.coefficients().size());
    for (const T& c : C.coefficients()) r.push_back(conj(c));
    return Polynomial<T>(std::move(r));
}

// Norm polynomial nu(C) = C gamma(C), an algebra polynomial; real exactly
// for members of the R^gamma[t] semigroup.
template <class T>
Polynomial<T> norm_poly(const Polynomial<T>& C) {
    return C * conj_poly(C);
}

// The real polynomial underlying P when every coefficient is scalar.
template <class T>
std::optional<RealPolynomial> as_real(const Polynomial<T>& P) {
    std::vector<Rational> r;
    r.reserve(P.coefficients().size());
    for (const T& c : P.coefficients()) {
        if (!AlgebraTraits<T>::is_scalar(c)) return std::nullopt;
        r.push_back(AlgebraTraits<T>::scalar_part(c));
    }
    return RealPolynomial(std::move(r));
}

// nu(C) as a real polynomial, when it is one.
template <class T>
std::optional<RealPolynomial> is_real_norm(const Polynomial<T>& C) {
    return as_real(norm_poly(C));
}

template <class T>
Polynomial<T> promote(const RealPolynomial& P) {
    std::vector<T> r;
    r.reserve(P.coefficients().size());
    for (const Rational& c : P.coefficients())
        r.push_back(AlgebraTraits<T>::from_rational(c));
    return Polynomial<T>(std::move(r));
}

// --- Real polynomial helpers ------------------------------------------------

RealPolynomial monic(const RealPolynomial& P);
RealPolynomial poly_gcd(RealPolynomial A, RealPolynomial B);
RealPolynomial derivative(const RealPolynomial& P);
bool divides_exactly(const RealPolynomial& divisor, const RealPolynomial& P);

// --- mrpf -------------------------------------------------------------------

// Per-component real polynomials of C (union of component keys across all
// coefficients).
template <class T>
std::vector<RealPolynomial> component_polynomials(const Polynomial<T>& C) {
    std::set<std::uint64_t> keys;
    for (const T& c : C.coefficients())
        for (std::uint64_t k : AlgebraTraits<T>::component_keys(c)) keys.insert(k);
    std::vector<RealPolynomial> out;
    for (std::uint64_t k : keys) {
        std::vector<Rational> comp;
        comp.reserve(C.coefficients().size());
        for (const T& c : C.coefficients())
            comp.push_back(AlgebraTraits<T>::component(c, k));
        out.push_back(RealPolynomial(std::move(comp)));
    }
    return out;
}

// Maximal real polynomial factor: the unique real monic factor of maximal
// degree, computed as the gcd of the component polynomials.  A real
// polynomial divides C iff it divides every component.
template <class T>
RealPolynomial mrpf(const Polynomial<T>& C) {
    if (C.is_zero()) throw ZeroPolynomialError("mrpf of the zero polynomial");
    RealPolynomial g;
    for (const RealPolynomial& comp : component_polynomials(C))
        g = poly_gcd(g, comp);
    return g;
}

// --- Parameter transformations ----------------------------------------------

// C(t + u) for real u.
template <class T>
Polynomial<T> shift(const Polynomial<T>& C, const Rational& u) {
    RealPolynomial lin(std::vector<Rational>{u, Rational(1)});
    Polynomial<T> result;
    RealPolynomial pw = RealPolynomial(Rational(1));
    for (int i = 0; i <= C.degree(); ++i) {
        result = result + C.coeff(i) * promote<T>(pw);
        pw = pw * lin;
    }
    return result;
}

// Fractional linear parameter transformation:
// (gamma t + delta)^deg C * C((alpha t + beta)(gamma t + delta)^-1),
// expanded exactly.  Requires alpha delta - beta gamma != 0.
template <class T>
Polynomial<T> moebius(const Polynomial<T>& C, const Rational& alpha,
                      const Rational& beta, const Rational& gamma,
                      const Rational& delta) {
    if ((alpha * delta - beta * gamma).is_zero())
        throw DegenerateTransformError("alpha*delta - beta*gamma = 0");
    if (C.is_zero()) return C;
    const int d = C.degree();
    RealPolynomial num(std::vector<Rational>{beta, alpha});
    RealPolynomial den(std::vector<Rational>{delta, gamma});

    std::vector<RealPolynomial> num_pow(d + 1), den_pow(d + 1);
    num_pow[0] = den_pow[0] = RealPolynomial(Rational(1));
    for (int i = 1; i <= d; ++i) {
        num_pow[i] = num_pow[i - 1] * num;
        den_pow[i] = den_pow[i - 1] * den;
    }

    Polynomial<T> result;
    for (int i = 0; i <= d; ++i)
        result = result + C.coeff(i) * promote<T>(num_pow[i] * den_pow[d - i]);
    return result;
}

} // namespace polyfact
