#pragma once

#include <array>
#include <string>

#include "polyfact/rational.hpp"

namespace polyfact {

// Quaternion over exact rationals, Hamilton convention:
// i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
struct Quaternion {
    Rational w, x, y, z;

    Quaternion() = default;
    Quaternion(Rational w_, Rational x_, Rational y_, Rational z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    explicit Quaternion(Rational scalar) : w(std::move(scalar)) {}
    explicit Quaternion(int scalar) : w(scalar) {}

    static Quaternion unit_i() { return {0, 1, 0, 0}; }
    static Quaternion unit_j() { return {0, 0, 1, 0}; }
    static Quaternion unit_k() { return {0, 0, 0, 1}; }

    bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
    bool is_scalar() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
    Rational scalar_part() const { return w; }
    Quaternion vector_part() const { return {0, x, y, z}; }

    std::array<Rational, 4> components() const { return {w, x, y, z}; }

    Quaternion operator-() const { return {-w, -x, -y, -z}; }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z,
                a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x};
    }
    friend Quaternion operator*(const Rational& s, const Quaternion& a) {
        return {s * a.w, s * a.x, s * a.y, s * a.z};
    }
    friend Quaternion operator*(const Quaternion& a, const Rational& s) { return s * a; }

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
    friend bool operator<(const Quaternion& a, const Quaternion& b) {
        return a.components() < b.components();
    }
};

inline Quaternion conj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

inline Rational norm(const Quaternion& a) {
    return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
}

inline Rational dot(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

Quaternion inverse(const Quaternion& a);

// Split quaternion over exact rationals, as the even Clifford algebra of
// signature (1,2,0) with is = e12, js = e13, ks = e23:
// is^2 = js^2 = +1, ks^2 = -1, is*js = -ks, js*ks = is, ks*is = js.
// The norm w^2 - x^2 - y^2 + z^2 admits zero divisors.
struct SplitQuaternion {
    Rational w, x, y, z;

    SplitQuaternion() = default;
    SplitQuaternion(Rational w_, Rational x_, Rational y_, Rational z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    explicit SplitQuaternion(Rational scalar) : w(std::move(scalar)) {}
    explicit SplitQuaternion(int scalar) : w(scalar) {}

    static SplitQuaternion unit_i() { return {0, 1, 0, 0}; }
    static SplitQuaternion unit_j() { return {0, 0, 1, 0}; }
    static SplitQuaternion unit_k() { return {0, 0, 0, 1}; }

    bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
    bool is_scalar() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
    Rational scalar_part() const { return w; }
    SplitQuaternion vector_part() const { return {0, x, y, z}; }

    std::array<Rational, 4> components() const { return {w, x, y, z}; }

    SplitQuaternion operator-() const { return {-w, -x, -y, -z}; }

    friend SplitQuaternion operator+(const SplitQuaternion& a, const SplitQuaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend SplitQuaternion operator-(const SplitQuaternion& a, const SplitQuaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend SplitQuaternion operator*(const SplitQuaternion& a, const SplitQuaternion& b) {
        return {a.w * b.w + a.x * b.x + a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z,
                a.w * b.z + a.z * b.w - a.x * b.y + a.y * b.x};
    }
    friend SplitQuaternion operator*(const Rational& s, const SplitQuaternion& a) {
        return {s * a.w, s * a.x, s * a.y, s * a.z};
    }
    friend SplitQuaternion operator*(const SplitQuaternion& a, const Rational& s) {
        return s * a;
    }

    friend bool operator==(const SplitQuaternion& a, const SplitQuaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const SplitQuaternion& a, const SplitQuaternion& b) {
        return !(a == b);
    }
    friend bool operator<(const SplitQuaternion& a, const SplitQuaternion& b) {
        return a.components() < b.components();
    }
};

inline SplitQuaternion conj(const SplitQuaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

inline Rational norm(const SplitQuaternion& a) {
    return a.w * a.w - a.x * a.x - a.y * a.y + a.z * a.z;
}

SplitQuaternion inverse(const SplitQuaternion& a);

// Dual quaternion primal + eps*dual with eps^2 = 0, eps central.
// Conjugation applies quaternion conjugation to both parts and fixes eps;
// the norm is a dual number with real part nu(primal).
struct DualQuaternion {
    Quaternion primal;
    Quaternion dual;

    DualQuaternion() = default;
    DualQuaternion(Quaternion p, Quaternion d)
        : primal(std::move(p)), dual(std::move(d)) {}
    explicit DualQuaternion(Quaternion p) : primal(std::move(p)) {}
    explicit DualQuaternion(Rational scalar) : primal(Quaternion(std::move(scalar))) {}
    explicit DualQuaternion(int scalar) : primal(Quaternion(scalar)) {}

    static DualQuaternion unit_i() { return DualQuaternion(Quaternion::unit_i()); }
    static DualQuaternion unit_j() { return DualQuaternion(Quaternion::unit_j()); }
    static DualQuaternion unit_k() { return DualQuaternion(Quaternion::unit_k()); }
    static DualQuaternion unit_eps() { return {Quaternion(), Quaternion(1)}; }

    bool is_zero() const { return primal.is_zero() && dual.is_zero(); }
    bool is_scalar() const { return primal.is_scalar() && dual.is_zero(); }
    Rational scalar_part() const { return primal.w; }

    std::array<Rational, 8> components() const {
        return {primal.w, primal.x, primal.y, primal.z,
                dual.w, dual.x, dual.y, dual.z};
    }

    DualQuaternion operator-() const { return {-primal, -dual}; }

    friend DualQuaternion operator+(const DualQuaternion& a, const DualQuaternion& b) {
        return {a.primal + b.primal, a.dual + b.dual};
    }
    friend DualQuaternion operator-(const DualQuaternion& a, const DualQuaternion& b) {
        return {a.primal - b.primal, a.dual - b.dual};
    }
    friend DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
        return {a.primal * b.primal, a.primal * b.dual + a.dual * b.primal};
    }
    friend DualQuaternion operator*(const Rational& s, const DualQuaternion& a) {
        return {s * a.primal, s * a.dual};
    }
    friend DualQuaternion operator*(const DualQuaternion& a, const Rational& s) {
        return s * a;
    }

    friend bool operator==(const DualQuaternion& a, const DualQuaternion& b) {
        return a.primal == b.primal && a.dual == b.dual;
    }
    friend bool operator!=(const DualQuaternion& a, const DualQuaternion& b) {
        return !(a == b);
    }
    friend bool operator<(const DualQuaternion& a, const DualQuaternion& b) {
        return a.components() < b.components();
    }
};

inline DualQuaternion conj(const DualQuaternion& a) {
    return {conj(a.primal), conj(a.dual)};
}

inline DualNumber norm(const DualQuaternion& a) {
    // a Cj(a) = primal Cj(primal) + eps (primal Cj(dual) + dual Cj(primal));
    // the eps part is the polarization 2<primal, dual>.
    return DualNumber(norm(a.primal), Rational(2) * dot(a.primal, a.dual));
}

DualQuaternion inverse(const DualQuaternion& a);

} // namespace polyfact
