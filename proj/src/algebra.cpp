#include "polyfact/algebra.hpp"

namespace polyfact {

std::optional<Quaternion> try_inverse(const Quaternion& a) {
    if (norm(a).is_zero()) return std::nullopt;
    return inverse(a);
}

std::optional<SplitQuaternion> try_inverse(const SplitQuaternion& a) {
    if (norm(a).is_zero()) return std::nullopt;
    return inverse(a);
}

std::optional<DualQuaternion> try_inverse(const DualQuaternion& a) {
    if (norm(a.primal).is_zero()) return std::nullopt;
    return inverse(a);
}

std::optional<MultiVector> try_inverse(const MultiVector& a) {
    MultiVector n = norm_element(a);
    if (!n.is_scalar() || n.is_zero()) return std::nullopt;
    return n.scalar_part().inverse() * conj(a);
}

std::optional<Rational> try_inverse(const Rational& a) {
    if (a.is_zero()) return std::nullopt;
    return a.inverse();
}

namespace {
// Blade masks for the even basis used by all three embeddings.
constexpr BladeMask kE12 = 0b0011;
constexpr BladeMask kE13 = 0b0101;
constexpr BladeMask kE23 = 0b0110;
constexpr BladeMask kE14 = 0b1001;
constexpr BladeMask kE24 = 0b1010;
constexpr BladeMask kE34 = 0b1100;
constexpr BladeMask kE1234 = 0b1111;
} // namespace

MultiVector to_even_clifford(const Quaternion& a) {
    MultiVector x(quaternion_signature());
    x.set(0, a.w);
    x.set(kE12, a.x);
    x.set(kE13, a.y);
    x.set(kE23, a.z);
    return x;
}

MultiVector to_even_clifford(const SplitQuaternion& a) {
    MultiVector x(split_signature());
    x.set(0, a.w);
    x.set(kE12, a.x);
    x.set(kE13, a.y);
    x.set(kE23, a.z);
    return x;
}

MultiVector to_even_clifford(const DualQuaternion& a) {
    MultiVector x(dual_quaternion_signature());
    x.set(0, a.primal.w);
    x.set(kE23, a.primal.x);
    x.set(kE13, a.primal.y);
    x.set(kE12, a.primal.z);
    x.set(kE1234, -a.dual.w);
    x.set(kE14, a.dual.x);
    x.set(kE24, -a.dual.y);
    x.set(kE34, a.dual.z);
    return x;
}

namespace {
void require_even_support(const MultiVector& x,
                          std::initializer_list<BladeMask> allowed) {
    if (!x.is_even())
        throw OddBladePresentError("element has odd-grade blades");
    for (const auto& [m, c] : x.coefficients()) {
        bool ok = false;
        for (BladeMask a : allowed)
            if (m == a) { ok = true; break; }
        if (!ok)
            throw OddBladePresentError("blade " + blade_name(m) +
                                       " outside the even subalgebra basis");
    }
}
} // namespace

Quaternion quaternion_from_even_clifford(const MultiVector& x) {
    if (x.signature() != quaternion_signature() && x.signature().n() != 0)
        throw SignatureMismatchError("expected an element of cl(0,3,0)");
    require_even_support(x, {0, kE12, kE13, kE23});
    return {x.coeff(0), x.coeff(kE12), x.coeff(kE13), x.coeff(kE23)};
}

SplitQuaternion split_from_even_clifford(const MultiVector& x) {
    if (x.signature() != split_signature() && x.signature().n() != 0)
        throw SignatureMismatchError("expected an element of cl(1,2,0)");
    require_even_support(x, {0, kE12, kE13, kE23});
    return {x.coeff(0), x.coeff(kE12), x.coeff(kE13), x.coeff(kE23)};
}

DualQuaternion from_even_clifford(const MultiVector& x) {
    if (x.signature() != dual_quaternion_signature() && x.signature().n() != 0)
        throw SignatureMismatchError("expected an element of cl(3,0,1)");
    require_even_support(x, {0, kE12, kE13, kE23, kE14, kE24, kE34, kE1234});
    Quaternion primal(x.coeff(0), x.coeff(kE23), x.coeff(kE13), x.coeff(kE12));
    Quaternion dual(-x.coeff(kE1234), x.coeff(kE14), -x.coeff(kE24), x.coeff(kE34));
    return {primal, dual};
}

} // namespace polyfact
