#include "polyfact/json_io.hpp"

namespace polyfact {

Json element_json(const Rational& r) { return r.str(); }

Json element_json(const Quaternion& q) {
    return Json{{"w", q.w.str()}, {"x", q.x.str()}, {"y", q.y.str()}, {"z", q.z.str()}};
}

Json element_json(const SplitQuaternion& q) {
    return Json{{"w", q.w.str()}, {"x", q.x.str()}, {"y", q.y.str()}, {"z", q.z.str()}};
}

Json element_json(const DualQuaternion& q) {
    return Json{{"primal", element_json(q.primal)}, {"dual", element_json(q.dual)}};
}

Json element_json(const MultiVector& x) {
    Json j = Json::object();
    for (const auto& [m, c] : x.coefficients()) j[blade_name(m)] = c.str();
    return j;
}

Json family_json(const AffineFamily& fam) {
    Json j;
    Json base = Json::array();
    for (const DualQuaternion& h : fam.base) base.push_back(factor_json(h));
    j["base"] = base;
    j["parameters"] = fam.parameters;
    Json dirs = Json::array();
    for (const auto& per_param : fam.directions) {
        Json row = Json::array();
        for (const Quaternion& d : per_param) row.push_back(element_json(d));
        dirs.push_back(row);
    }
    j["directions"] = dirs;
    j["text"] = fam.str();
    return j;
}

Json diagnostics_json(const std::vector<OrderingDiagnostic>& diags) {
    Json arr = Json::array();
    for (const OrderingDiagnostic& d : diags) {
        Json j;
        Json quads = Json::array();
        for (const RealPolynomial& m : d.quadratics) quads.push_back(to_string(m));
        j["ordering"] = quads;
        if (d.failed_step > 0) {
            j["step"] = d.failed_step;
            j["failure"] = d.failure_kind;
            j["remainder"] = d.failure_detail;
        } else {
            j["factorization_index"] = d.factorization_index;
        }
        arr.push_back(j);
    }
    return arr;
}

Json split_attempts_json(const std::vector<SplitAttempt>& attempts) {
    Json arr = Json::array();
    for (const SplitAttempt& a : attempts) {
        arr.push_back(Json{{"M", to_string(a.M)},
                           {"branch", a.branch},
                           {"success", a.success},
                           {"detail", a.detail}});
    }
    return arr;
}

Json classification_json(const MotionClassification& mc) {
    Json j;
    j["is_motion"] = mc.is_motion;
    j["is_generic"] = mc.is_generic;
    if (mc.is_bounded.has_value()) j["is_bounded"] = *mc.is_bounded;
    if (mc.norm.has_value()) j["norm_polynomial"] = to_string(*mc.norm);
    j["primal_mrpf"] = to_string(mc.primal_mrpf);
    return j;
}

Json sphere_family_json(const SphereFamily& s) {
    return Json{{"x", s.x.str()},
                {"y", s.y.str()},
                {"multiplicity", s.multiplicity},
                {"quadratic", to_string(s.quadratic())},
                {"text", "t - (" + s.x.str() + " + U*" + s.y.str() +
                             "), U^2 = -1 on the unit sphere"}};
}

namespace {
const char* kind_name(FixedKind k) {
    switch (k) {
        case FixedKind::rotation_center: return "rotation-center";
        case FixedKind::line: return "line";
        default: return "translation-or-identity";
    }
}

Json vec_json(const Vec3& v) {
    return Json::array({v[0].str(), v[1].str(), v[2].str()});
}
} // namespace

Json linkage_json(const Linkage& lk) {
    Json j;
    switch (lk.topology) {
        case LinkageTopology::four_bar: j["topology"] = "four-bar"; break;
        case LinkageTopology::parallelogram_family:
            j["topology"] = "parallelogram-family";
            break;
        default: j["topology"] = "open-chain"; break;
    }
    Json legs = Json::array();
    for (const LinkageLeg& leg : lk.legs) {
        Json joints = Json::array();
        for (const FixedElement& fe : leg.joints) {
            FixedElement n = fe.normalized();
            joints.push_back(Json{{"kind", kind_name(n.kind)},
                                  {"direction", vec_json(n.primal_vec)},
                                  {"moment", vec_json(n.dual_vec)}});
        }
        legs.push_back(joints);
    }
    j["legs"] = legs;
    return j;
}

std::string linkage_csv(const Linkage& lk) {
    std::string out = "leg,joint,kind,dx,dy,dz,mx,my,mz\n";
    for (std::size_t l = 0; l < lk.legs.size(); ++l) {
        for (std::size_t i = 0; i < lk.legs[l].joints.size(); ++i) {
            FixedElement n = lk.legs[l].joints[i].normalized();
            out += std::to_string(l) + "," + std::to_string(i) + "," +
                   kind_name(n.kind);
            for (const Rational& v : n.primal_vec) out += "," + v.str();
            for (const Rational& v : n.dual_vec) out += "," + v.str();
            out += "\n";
        }
    }
    return out;
}

std::string trajectory_csv(const std::vector<Vec3>& points) {
    std::string out = "x,y,z\n";
    for (const Vec3& p : points)
        out += p[0].str() + "," + p[1].str() + "," + p[2].str() + "\n";
    return out;
}

} // namespace polyfact
