#pragma once

#include <string>

#include "polyfact/polynomial.hpp"

namespace polyfact {

// Recursive-descent parser for the polynomial grammar shared by all CLI
// commands.  Accepts sums of terms, parenthesized subexpressions, products
// by `*` or juxtaposition (order-preserving, multiplication is not
// commutative), powers with `^`, rational literals `n` / `n/d`, the
// indeterminate `t`, and the unit symbols of the selected algebra:
//   H:  i, j, k        S: is, js, ks      DH: i, j, k, eps
//   cl(p,q,r): e1, e12, e134, ...
// Whitespace is insignificant.  Examples the grammar accepts:
//   t^2 - (2i+j+2)t + (2i+j+2k+1)
//   (t - 2i - 1)*(t - j - 1)
//   t^2 + 1 - eps*(j t - i)
Polynomial<Quaternion> parse_quaternion_poly(const std::string& text);
Polynomial<SplitQuaternion> parse_split_poly(const std::string& text);
Polynomial<DualQuaternion> parse_dual_quaternion_poly(const std::string& text);
Polynomial<MultiVector> parse_clifford_poly(const std::string& text, const Signature& sig);
RealPolynomial parse_real_poly(const std::string& text);

} // namespace polyfact
