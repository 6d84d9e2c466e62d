#pragma once

#include <string>

#include "polyfact/polynomial.hpp"

namespace polyfact {

// Canonical text renderings.  The printer and the parser agree on this
// format: parse(to_string(x)) == x for every value.
std::string to_string(const Rational& r);
std::string to_string(const DualNumber& d);
std::string to_string(const Quaternion& q);
std::string to_string(const SplitQuaternion& q);
std::string to_string(const DualQuaternion& q);
std::string to_string(const MultiVector& x);

namespace detail {

// Coefficient classification used when rendering polynomial terms.
template <class T>
int nonzero_component_count(const T& x) {
    int n = 0;
    for (std::uint64_t k : AlgebraTraits<T>::component_keys(x))
        if (!AlgebraTraits<T>::component(x, k).is_zero()) ++n;
    return n;
}

template <class T>
int first_component_sign(const T& x) {
    for (std::uint64_t k : AlgebraTraits<T>::component_keys(x)) {
        Rational c = AlgebraTraits<T>::component(x, k);
        if (!c.is_zero()) return c.sign();
    }
    return 0;
}

} // namespace detail

// Renders terms from the highest power down, e.g.
// "t^2 - (2i+j+2)t + (2i+j+2k+1)".  Scalar coefficients print bare,
// anything else is parenthesized next to the power of t.
template <class T>
std::string to_string(const Polynomial<T>& P) {
    if (P.is_zero()) return "0";
    std::string out;
    for (int i = P.degree(); i >= 0; --i) {
        T c = P.coeff(i);
        if (c.is_zero()) continue;

        bool negate = detail::first_component_sign(c) < 0;
        if (out.empty()) {
            if (negate) out += "-";
        } else {
            out += negate ? " - " : " + ";
        }
        if (negate) c = -c;

        const bool scalar = AlgebraTraits<T>::is_scalar(c);
        const bool single = detail::nonzero_component_count(c) == 1;
        std::string cs = to_string(c);

        std::string power;
        if (i >= 2)
            power = "t^" + std::to_string(i);
        else if (i == 1)
            power = "t";

        if (power.empty()) {
            out += single ? cs : "(" + cs + ")";
        } else if (scalar && AlgebraTraits<T>::scalar_part(c).is_one()) {
            out += power;
        } else if (scalar) {
            out += cs + power;
        } else {
            out += "(" + cs + ")" + power;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace polyfact
