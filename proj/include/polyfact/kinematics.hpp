#pragma once

#include <array>

#include "polyfact/factor.hpp"

namespace polyfact {

using Vec3 = std::array<Rational, 3>;

enum class FixedKind { rotation_center, line, translation_or_identity };

// The element c = h - Cj(h) fixed by the displacements t - h (t real).
// For quaternions and split quaternions c is a rotation center direction;
// for dual quaternions it carries the Pluecker data of the fixed line.
struct FixedElement {
    FixedKind kind = FixedKind::rotation_center;
    Vec3 primal_vec{Rational(0), Rational(0), Rational(0)};
    Vec3 dual_vec{Rational(0), Rational(0), Rational(0)};

    // Jointly rescales both vectors to coprime integer coordinates with
    // the first nonzero primal coordinate positive.
    FixedElement normalized() const;

    friend bool operator==(const FixedElement& a, const FixedElement& b) {
        return a.kind == b.kind && a.primal_vec == b.primal_vec &&
               a.dual_vec == b.dual_vec;
    }
};

FixedElement fixed_element(const Quaternion& h);
FixedElement fixed_element(const SplitQuaternion& h);
// Requires nu(t-h) real; throws NonRealFactorNormError otherwise.
FixedElement fixed_element(const DualQuaternion& h);

// Line with <direction, moment> = 0, normalized to coprime integers.
struct PlueckerLine {
    Vec3 direction;
    Vec3 moment;

    friend bool operator==(const PlueckerLine& a, const PlueckerLine& b) {
        return a.direction == b.direction && a.moment == b.moment;
    }
};

// Pluecker coordinates [a, -b] of the fixed line of c = a + eps b.
PlueckerLine pluecker_line(const FixedElement& c);

// Group actions on points, exact: sandwich x -> r x Cj(r) / nu(r) for H
// and S (x as a pure element), and the SE(3) point action for DH.
Vec3 act(const Quaternion& r, const Vec3& x);
Vec3 act(const SplitQuaternion& r, const Vec3& x);
Vec3 act(const DualQuaternion& r, const Vec3& x);

// Point trajectory of the motion C: act(C(t), x) at each sample.
template <class T>
std::vector<Vec3> trajectory(const Polynomial<T>& C, const Vec3& x,
                             const std::vector<Rational>& ts) {
    std::vector<Vec3> out;
    out.reserve(ts.size());
    for (const Rational& t : ts) out.push_back(act(eval_scalar(C, t), x));
    return out;
}

enum class LinkageTopology { open_chain, four_bar, parallelogram_family };

struct LinkageLeg {
    std::vector<FixedElement> joints;  // one per factor, in factor order
};

struct Linkage {
    LinkageTopology topology = LinkageTopology::open_chain;
    std::vector<LinkageLeg> legs;  // one per factorization
};

// Builds the linkage whose legs are the factorizations of the same motion:
// every factorization is verified against C and contributes the fixed
// elements of its factors as joints.
template <class T>
Linkage linkage_from_factorizations(const Polynomial<T>& C,
                                    const std::vector<LinearFactorization<T>>& facts,
                                    bool from_family = false) {
    if (facts.empty())
        throw VerificationError("a linkage needs at least one factorization");
    Linkage lk;
    for (const auto& f : facts) {
        if (!verify(C, f))
            throw VerificationError("factorization does not expand to the motion");
        LinkageLeg leg;
        for (const T& h : f.zeros) leg.joints.push_back(fixed_element(h));
        lk.legs.push_back(std::move(leg));
    }
    if (from_family)
        lk.topology = LinkageTopology::parallelogram_family;
    else if (facts.size() >= 2)
        lk.topology = LinkageTopology::four_bar;
    else
        lk.topology = LinkageTopology::open_chain;
    return lk;
}

} // namespace polyfact
