#include "polyfact/kinematics.hpp"

namespace polyfact {

namespace {

bool all_zero(const Vec3& v) {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

Rational dot3(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Quaternion pure(const Vec3& v) { return {Rational(0), v[0], v[1], v[2]}; }
SplitQuaternion pure_split(const Vec3& v) { return {Rational(0), v[0], v[1], v[2]}; }

Vec3 vec_of(const Quaternion& q) { return {q.x, q.y, q.z}; }
Vec3 vec_of_split(const SplitQuaternion& q) { return {q.x, q.y, q.z}; }

} // namespace

FixedElement FixedElement::normalized() const {
    FixedElement out = *this;
    // Common denominator, then divide by the gcd of all six numerators.
    Integer den(1);
    for (const Rational* v : {&out.primal_vec[0], &out.primal_vec[1], &out.primal_vec[2],
                              &out.dual_vec[0], &out.dual_vec[1], &out.dual_vec[2]})
        den = lcm(den, v->denominator());
    Integer g(0);
    auto scaled = [&](const Rational& r) { return Rational(den) * r; };
    for (const Rational* v : {&out.primal_vec[0], &out.primal_vec[1], &out.primal_vec[2],
                              &out.dual_vec[0], &out.dual_vec[1], &out.dual_vec[2]})
        g = gcd(g, scaled(*v).numerator());
    if (g == 0) return out;
    Rational scale = Rational(den, g);
    int lead_sign = 0;
    for (const Rational& v : out.primal_vec)
        if (!v.is_zero()) { lead_sign = v.sign(); break; }
    if (lead_sign == 0)
        for (const Rational& v : out.dual_vec)
            if (!v.is_zero()) { lead_sign = v.sign(); break; }
    if (lead_sign < 0) scale = -scale;
    for (Rational* v : {&out.primal_vec[0], &out.primal_vec[1], &out.primal_vec[2],
                        &out.dual_vec[0], &out.dual_vec[1], &out.dual_vec[2]})
        *v *= scale;
    return out;
}

FixedElement fixed_element(const Quaternion& h) {
    Quaternion c = h - conj(h);
    FixedElement fe;
    fe.primal_vec = vec_of(c);
    fe.kind = all_zero(fe.primal_vec) ? FixedKind::translation_or_identity
                                      : FixedKind::rotation_center;
    return fe;
}

FixedElement fixed_element(const SplitQuaternion& h) {
    SplitQuaternion c = h - conj(h);
    FixedElement fe;
    fe.primal_vec = vec_of_split(c);
    fe.kind = all_zero(fe.primal_vec) ? FixedKind::translation_or_identity
                                      : FixedKind::rotation_center;
    return fe;
}

FixedElement fixed_element(const DualQuaternion& h) {
    auto nu = is_real_norm(Polynomial<DualQuaternion>::linear_from_zero(h));
    if (!nu)
        throw NonRealFactorNormError("nu(t - h) is not real for h = " + to_string(h));
    DualQuaternion c = h - conj(h);
    FixedElement fe;
    fe.primal_vec = vec_of(c.primal);
    fe.dual_vec = vec_of(c.dual);
    fe.kind = all_zero(fe.primal_vec) ? FixedKind::translation_or_identity
                                      : FixedKind::line;
    return fe;
}

PlueckerLine pluecker_line(const FixedElement& c) {
    if (all_zero(c.primal_vec))
        throw NonRealFactorNormError("degenerate fixed element: zero primal part");
    FixedElement n = c.normalized();
    PlueckerLine line;
    line.direction = n.primal_vec;
    line.moment = {-n.dual_vec[0], -n.dual_vec[1], -n.dual_vec[2]};
    if (!dot3(line.direction, line.moment).is_zero())
        throw NonRealFactorNormError(
            "fixed element violates the Pluecker identity <d, m> = 0");
    return line;
}

Vec3 act(const Quaternion& r, const Vec3& x) {
    Rational n = norm(r);
    if (n.is_zero()) throw NotInvertibleError("acting element has zero norm");
    Quaternion y = r * pure(x) * conj(r);
    if (!y.w.is_zero()) throw InternalDefectError("sandwich result is not pure");
    Rational ni = n.inverse();
    return {y.x * ni, y.y * ni, y.z * ni};
}

Vec3 act(const SplitQuaternion& r, const Vec3& x) {
    Rational n = norm(r);
    if (n.is_zero()) throw NotInvertibleError("acting element has null norm");
    SplitQuaternion y = r * pure_split(x) * conj(r);
    if (!y.w.is_zero()) throw InternalDefectError("sandwich result is not pure");
    Rational ni = n.inverse();
    return {y.x * ni, y.y * ni, y.z * ni};
}

Vec3 act(const DualQuaternion& r, const Vec3& x) {
    const Quaternion& a = r.primal;
    const Quaternion& b = r.dual;
    Rational n = norm(a);
    if (n.is_zero())
        throw NotInvertibleError("dual quaternion with non-invertible norm");
    // 1 + eps y = (a - eps b)(1 + eps x)(Cj(a) + eps Cj(b)) / nu(a).
    Quaternion y = a * pure(x) * conj(a) + a * conj(b) - b * conj(a);
    if (!y.w.is_zero()) throw InternalDefectError("point image is not a point");
    Rational ni = n.inverse();
    return {y.x * ni, y.y * ni, y.z * ni};
}

} // namespace polyfact
