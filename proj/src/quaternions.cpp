#include "polyfact/quaternions.hpp"

namespace polyfact {

Quaternion inverse(const Quaternion& a) {
    Rational n = norm(a);
    if (n.is_zero()) throw NotInvertibleError("zero quaternion");
    return n.inverse() * conj(a);
}

SplitQuaternion inverse(const SplitQuaternion& a) {
    Rational n = norm(a);
    if (n.is_zero())
        throw NotInvertibleError("split quaternion with null norm");
    return n.inverse() * conj(a);
}

DualQuaternion inverse(const DualQuaternion& a) {
    // (p + eps d)^-1 = p^-1 - eps p^-1 d p^-1, defined iff nu(p) != 0.
    if (norm(a.primal).is_zero())
        throw NotInvertibleError("dual quaternion with purely dual norm");
    Quaternion pi = inverse(a.primal);
    return {pi, -(pi * a.dual * pi)};
}

} // namespace polyfact
