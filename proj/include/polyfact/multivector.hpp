#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyfact/rational.hpp"
#include "polyfact/signature.hpp"

namespace polyfact {

// Sparse multivector over Cl(p,q,r) with exact rational coefficients.
// Coefficients are keyed by basis-blade mask; absent blades are zero and
// zero coefficients are never stored.  Immutable in spirit: all operations
// return new values.
class MultiVector {
public:
    MultiVector() = default;
    explicit MultiVector(Signature sig) : sig_(sig) {}
    MultiVector(Signature sig, const Rational& scalar) : sig_(sig) {
        set(0, scalar);
    }

    static MultiVector blade(Signature sig, BladeMask m, const Rational& c = Rational(1)) {
        MultiVector x(sig);
        x.set(m, c);
        return x;
    }

    // e_i for 1-based generator index i.
    static MultiVector generator(Signature sig, int i) {
        if (i < 1 || i > sig.n())
            throw SignatureMismatchError("generator index out of range");
        return blade(sig, BladeMask(1) << (i - 1));
    }

    const Signature& signature() const { return sig_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_scalar() const {
        return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
    }
    Rational scalar_part() const {
        auto it = coeffs_.find(0);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }
    Rational coeff(BladeMask m) const {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    bool is_even() const {
        for (const auto& [m, c] : coeffs_)
            if (blade_grade(m) % 2 != 0) return false;
        return true;
    }

    // Supported on generators only (grade-1 part equals the whole element).
    bool is_vector() const {
        for (const auto& [m, c] : coeffs_)
            if (blade_grade(m) != 1) return false;
        return true;
    }

    const std::map<BladeMask, Rational>& coefficients() const { return coeffs_; }

    void set(BladeMask m, const Rational& c) {
        if (c.is_zero())
            coeffs_.erase(m);
        else
            coeffs_[m] = c;
    }

    MultiVector operator-() const;
    friend MultiVector operator+(const MultiVector& a, const MultiVector& b);
    friend MultiVector operator-(const MultiVector& a, const MultiVector& b);
    friend MultiVector operator*(const MultiVector& a, const MultiVector& b);
    friend MultiVector operator*(const Rational& s, const MultiVector& a);
    friend MultiVector operator*(const MultiVector& a, const Rational& s) { return s * a; }

    // Scalars built without generators (empty signature) compare equal to
    // the same scalar in any algebra; everything else requires matching
    // signatures.
    friend bool operator==(const MultiVector& a, const MultiVector& b) {
        if (a.sig_ != b.sig_ && a.sig_.n() != 0 && b.sig_.n() != 0) return false;
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const MultiVector& a, const MultiVector& b) { return !(a == b); }

    // Ordering for canonical sorting of results; compares signature then
    // the sparse coefficient maps lexicographically.
    friend bool operator<(const MultiVector& a, const MultiVector& b);

private:
    Signature sig_;
    std::map<BladeMask, Rational> coeffs_;
};

// Clifford conjugation: linear extension of
// Cj(e_{i1} ... e_{ik}) = (-1)^k e_{ik} ... e_{i1}.
MultiVector conj(const MultiVector& x);

// x * Cj(x); a general multivector, scalar for the elements this library
// inverts.
MultiVector norm_element(const MultiVector& x);

// Cj(x)/nu(x) when nu(x) is a nonzero scalar; throws NotInvertibleError
// otherwise.
MultiVector inverse(const MultiVector& x);

} // namespace polyfact
