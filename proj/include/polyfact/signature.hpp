#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "polyfact/errors.hpp"

namespace polyfact {

// Basis blades are index sets over the generators e_1..e_n, stored as a
// bitmask (bit i-1 set  <=>  e_i present).  The empty mask is the real
// unit e_0.
using BladeMask = std::uint32_t;

// Signature (p, q, r) of a Clifford algebra Cl(p,q,r): the first p
// generators square to +1, the next q to -1, the last r to 0.
struct Signature {
    int p = 0;
    int q = 0;
    int r = 0;

    static constexpr int max_generators = 12;

    Signature() = default;
    Signature(int p_, int q_, int r_) : p(p_), q(q_), r(r_) {
        if (p < 0 || q < 0 || r < 0)
            throw SignatureMismatchError("negative signature entry");
        if (r > 1)
            throw SignatureMismatchError("signatures with r > 1 are not supported");
        if (n() > max_generators)
            throw SignatureMismatchError("too many generators (cap " +
                                         std::to_string(max_generators) + ")");
    }

    int n() const { return p + q + r; }

    // Square of generator e_i (1-based): +1, -1 or 0.
    int generator_square(int i) const {
        if (i < 1 || i > n())
            throw SignatureMismatchError("generator index out of range");
        if (i <= p) return 1;
        if (i <= p + q) return -1;
        return 0;
    }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.p == b.p && a.q == b.q && a.r == b.r;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

    std::string str() const {
        return "cl(" + std::to_string(p) + "," + std::to_string(q) + "," +
               std::to_string(r) + ")";
    }
};

inline int blade_grade(BladeMask m) { return std::popcount(m); }

// Sign from sorting the concatenation of two sorted index lists by adjacent
// transpositions: each generator of b moves left past every generator of a
// with a larger index.
inline int blade_reorder_sign(BladeMask a, BladeMask b) {
    int swaps = 0;
    BladeMask bb = b;
    while (bb) {
        int g = std::countr_zero(bb);
        swaps += std::popcount(a >> (g + 1));
        bb &= bb - 1;
    }
    return (swaps % 2 == 0) ? 1 : -1;
}

// Product of basis blades under the given signature.  Returns the sign
// (may be 0 when a common generator squares to 0) and the resulting mask
// a XOR b.
inline int blade_product_sign(const Signature& sig, BladeMask a, BladeMask b) {
    int sign = blade_reorder_sign(a, b);
    BladeMask common = a & b;
    while (common) {
        int g = std::countr_zero(common);
        sign *= sig.generator_square(g + 1);
        if (sign == 0) return 0;
        common &= common - 1;
    }
    return sign;
}

// Clifford conjugation of a basis blade of grade k is
// (-1)^k * reversal = (-1)^(k(k+1)/2) times the blade itself.
inline int blade_conjugation_sign(BladeMask m) {
    int k = blade_grade(m);
    return (k * (k + 1) / 2) % 2 == 0 ? 1 : -1;
}

std::string blade_name(BladeMask m);

} // namespace polyfact
