#pragma once

#include <json.hpp>

#include "polyfact/factor.hpp"
#include "polyfact/kinematics.hpp"
#include "polyfact/motion.hpp"
#include "polyfact/quatfact.hpp"
#include "polyfact/splitfact.hpp"

namespace polyfact {

using Json = nlohmann::json;

Json element_json(const Rational& r);
Json element_json(const Quaternion& q);
Json element_json(const SplitQuaternion& q);
Json element_json(const DualQuaternion& q);
Json element_json(const MultiVector& x);

template <class T>
Json factor_json(const T& h) {
    Json j;
    j["h"] = element_json(h);
    j["text"] = to_string(Polynomial<T>::linear_from_zero(h));
    return j;
}

template <class T>
Json factorization_json(const LinearFactorization<T>& f) {
    Json arr = Json::array();
    for (const T& h : f.zeros) arr.push_back(factor_json(h));
    return arr;
}

Json family_json(const AffineFamily& fam);
Json diagnostics_json(const std::vector<OrderingDiagnostic>& diags);
Json split_attempts_json(const std::vector<SplitAttempt>& attempts);
Json classification_json(const MotionClassification& mc);
Json linkage_json(const Linkage& lk);
Json sphere_family_json(const SphereFamily& s);

std::string linkage_csv(const Linkage& lk);
std::string trajectory_csv(const std::vector<Vec3>& points);

} // namespace polyfact
