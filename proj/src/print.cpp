#include "polyfact/print.hpp"

#include <array>

namespace polyfact {

namespace {

// Renders a 4-slot element over the given unit names; empty name = scalar
// slot.  Coefficients 1 and -1 on units drop the "1".
std::string render_terms(const std::array<Rational, 4>& comp,
                         const std::array<const char*, 4>& units) {
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) {
        const Rational& c = comp[i];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string unit = units[i];
        if (unit.empty())
            out += a.str();
        else if (a.is_one())
            out += unit;
        else
            out += a.str() + unit;
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const DualNumber& d) { return d.str(); }

std::string to_string(const Quaternion& q) {
    return render_terms(q.components(), {"", "i", "j", "k"});
}

std::string to_string(const SplitQuaternion& q) {
    return render_terms(q.components(), {"", "is", "js", "ks"});
}

std::string to_string(const DualQuaternion& q) {
    if (q.dual.is_zero()) return to_string(q.primal);
    std::string dual = "eps*(" + to_string(q.dual) + ")";
    if (q.primal.is_zero()) return dual;
    return to_string(q.primal) + " + " + dual;
}

std::string to_string(const MultiVector& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : x.coefficients()) {
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (m == 0)
            out += a.str();
        else if (a.is_one())
            out += blade_name(m);
        else
            out += a.str() + blade_name(m);
    }
    return out;
}

} // namespace polyfact
