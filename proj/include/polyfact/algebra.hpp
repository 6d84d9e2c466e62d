#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyfact/multivector.hpp"
#include "polyfact/quaternions.hpp"
#include "polyfact/rational.hpp"

namespace polyfact {

inline Rational conj(const Rational& r) { return r; }

std::optional<Quaternion> try_inverse(const Quaternion& a);
std::optional<SplitQuaternion> try_inverse(const SplitQuaternion& a);
std::optional<DualQuaternion> try_inverse(const DualQuaternion& a);
std::optional<MultiVector> try_inverse(const MultiVector& a);
std::optional<Rational> try_inverse(const Rational& a);

// Uniform compile-time interface over the coefficient algebras.  The
// component keys index the real coordinates of an element (basis slots for
// the named algebras, blade masks for multivectors); mrpf and realness
// tests are computed through them.
template <class T>
struct AlgebraTraits;

template <>
struct AlgebraTraits<Rational> {
    static constexpr const char* name = "R";
    static Rational from_rational(const Rational& r) { return r; }
    static bool is_scalar(const Rational&) { return true; }
    static Rational scalar_part(const Rational& r) { return r; }
    static std::vector<std::uint64_t> component_keys(const Rational& r) {
        if (r.is_zero()) return {};
        return {0};
    }
    static Rational component(const Rational& r, std::uint64_t) { return r; }
};

template <>
struct AlgebraTraits<Quaternion> {
    static constexpr const char* name = "H";
    static Quaternion from_rational(const Rational& r) { return Quaternion(r); }
    static bool is_scalar(const Quaternion& a) { return a.is_scalar(); }
    static Rational scalar_part(const Quaternion& a) { return a.w; }
    static std::vector<std::uint64_t> component_keys(const Quaternion&) {
        return {0, 1, 2, 3};
    }
    static Rational component(const Quaternion& a, std::uint64_t k) {
        return a.components()[k];
    }
};

template <>
struct AlgebraTraits<SplitQuaternion> {
    static constexpr const char* name = "S";
    static SplitQuaternion from_rational(const Rational& r) { return SplitQuaternion(r); }
    static bool is_scalar(const SplitQuaternion& a) { return a.is_scalar(); }
    static Rational scalar_part(const SplitQuaternion& a) { return a.w; }
    static std::vector<std::uint64_t> component_keys(const SplitQuaternion&) {
        return {0, 1, 2, 3};
    }
    static Rational component(const SplitQuaternion& a, std::uint64_t k) {
        return a.components()[k];
    }
};

template <>
struct AlgebraTraits<DualQuaternion> {
    static constexpr const char* name = "DH";
    static DualQuaternion from_rational(const Rational& r) { return DualQuaternion(r); }
    static bool is_scalar(const DualQuaternion& a) { return a.is_scalar(); }
    static Rational scalar_part(const DualQuaternion& a) { return a.primal.w; }
    static std::vector<std::uint64_t> component_keys(const DualQuaternion&) {
        return {0, 1, 2, 3, 4, 5, 6, 7};
    }
    static Rational component(const DualQuaternion& a, std::uint64_t k) {
        return a.components()[k];
    }
};

template <>
struct AlgebraTraits<MultiVector> {
    static constexpr const char* name = "cl";
    static MultiVector from_rational(const Rational& r) {
        return MultiVector(Signature(), r);
    }
    static bool is_scalar(const MultiVector& a) { return a.is_scalar(); }
    static Rational scalar_part(const MultiVector& a) { return a.scalar_part(); }
    static std::vector<std::uint64_t> component_keys(const MultiVector& a) {
        std::vector<std::uint64_t> keys;
        keys.reserve(a.coefficients().size());
        for (const auto& [m, c] : a.coefficients()) keys.push_back(m);
        return keys;
    }
    static Rational component(const MultiVector& a, std::uint64_t k) {
        return a.coeff(static_cast<BladeMask>(k));
    }
};

// --- Embeddings into even Clifford subalgebras -----------------------------
//
// H  <-> Cl+(0,3,0) with i = e12, j = e13, k = e23.
// S  <-> Cl+(1,2,0) with is = e12, js = e13, ks = e23.
// DH <-> Cl+(3,0,1); the variant of Klawitter's map used here is
//   1 = e0, i = e23, j = e13, k = e12,
//   eps = -e1234, eps*i = e14, eps*j = -e24, eps*k = e34,
// which is the sign choice that makes the map multiplicative for the
// Hamilton products above (see README notes on conventions).

inline Signature quaternion_signature() { return Signature(0, 3, 0); }
inline Signature split_signature() { return Signature(1, 2, 0); }
inline Signature dual_quaternion_signature() { return Signature(3, 0, 1); }

MultiVector to_even_clifford(const Quaternion& a);
MultiVector to_even_clifford(const SplitQuaternion& a);
MultiVector to_even_clifford(const DualQuaternion& a);

Quaternion quaternion_from_even_clifford(const MultiVector& x);
SplitQuaternion split_from_even_clifford(const MultiVector& x);
DualQuaternion from_even_clifford(const MultiVector& x);

} // namespace polyfact
