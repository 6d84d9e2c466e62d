#include "polyfact/multivector.hpp"

namespace polyfact {

std::string blade_name(BladeMask m) {
    if (m == 0) return "e0";
    std::string s = "e";
    for (int i = 0; i < 32; ++i)
        if (m & (BladeMask(1) << i)) s += std::to_string(i + 1);
    return s;
}

static void check_same_signature(const MultiVector& a, const MultiVector& b) {
    // Scalars constructed with the default signature combine with anything.
    if (a.signature().n() == 0 || b.signature().n() == 0) return;
    if (a.signature() != b.signature())
        throw SignatureMismatchError("operands live in " + a.signature().str() +
                                     " and " + b.signature().str());
}

static Signature merged_signature(const MultiVector& a, const MultiVector& b) {
    return a.signature().n() != 0 ? a.signature() : b.signature();
}

MultiVector MultiVector::operator-() const {
    MultiVector r(sig_);
    for (const auto& [m, c] : coeffs_) r.coeffs_.emplace(m, -c);
    return r;
}

MultiVector operator+(const MultiVector& a, const MultiVector& b) {
    check_same_signature(a, b);
    MultiVector r(merged_signature(a, b));
    r.coeffs_ = a.coeffs_;
    for (const auto& [m, c] : b.coeffs_) {
        auto it = r.coeffs_.find(m);
        if (it == r.coeffs_.end()) {
            r.coeffs_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.coeffs_.erase(it);
        }
    }
    return r;
}

MultiVector operator-(const MultiVector& a, const MultiVector& b) {
    return a + (-b);
}

MultiVector operator*(const MultiVector& a, const MultiVector& b) {
    check_same_signature(a, b);
    Signature sig = merged_signature(a, b);
    MultiVector r(sig);
    for (const auto& [ma, ca] : a.coeffs_) {
        for (const auto& [mb, cb] : b.coeffs_) {
            int sign = blade_product_sign(sig, ma, mb);
            if (sign == 0) continue;
            BladeMask m = ma ^ mb;
            Rational term = ca * cb;
            if (sign < 0) term = -term;
            auto it = r.coeffs_.find(m);
            if (it == r.coeffs_.end()) {
                if (!term.is_zero()) r.coeffs_.emplace(m, term);
            } else {
                it->second += term;
                if (it->second.is_zero()) r.coeffs_.erase(it);
            }
        }
    }
    return r;
}

MultiVector operator*(const Rational& s, const MultiVector& a) {
    MultiVector r(a.sig_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.coeffs_) r.coeffs_.emplace(m, s * c);
    return r;
}

bool operator<(const MultiVector& a, const MultiVector& b) {
    if (a.sig_.p != b.sig_.p) return a.sig_.p < b.sig_.p;
    if (a.sig_.q != b.sig_.q) return a.sig_.q < b.sig_.q;
    if (a.sig_.r != b.sig_.r) return a.sig_.r < b.sig_.r;
    return a.coeffs_ < b.coeffs_;
}

MultiVector conj(const MultiVector& x) {
    MultiVector r(x.signature());
    for (const auto& [m, c] : x.coefficients())
        r.set(m, blade_conjugation_sign(m) < 0 ? -c : c);
    return r;
}

MultiVector norm_element(const MultiVector& x) {
    return x * conj(x);
}

MultiVector inverse(const MultiVector& x) {
    MultiVector n = norm_element(x);
    if (!n.is_scalar() || n.is_zero())
        throw NotInvertibleError("multivector norm is not a nonzero scalar");
    return n.scalar_part().inverse() * conj(x);
}

} // namespace polyfact
