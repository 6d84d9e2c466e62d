#pragma once

#include <deque>
#include <span>
#include <string>
#include <vector>

#include "polyfact/polynomial.hpp"
#include "polyfact/print.hpp"
#include "polyfact/realroots.hpp"

namespace polyfact {

// An ordered product C = leading * (t - h_1)(t - h_2) ... (t - h_n).
// The identity is verified on construction through checked().
template <class T>
struct LinearFactorization {
    T leading = AlgebraTraits<T>::from_rational(Rational(1));
    std::vector<T> zeros;  // h_i in left-to-right factor order

    Polynomial<T> expand() const {
        Polynomial<T> p{leading};
        for (const T& h : zeros) p = p * Polynomial<T>::linear_from_zero(h);
        return p;
    }

    static LinearFactorization checked(const Polynomial<T>& C, T leading,
                                       std::vector<T> zeros) {
        LinearFactorization f;
        f.leading = std::move(leading);
        f.zeros = std::move(zeros);
        if (!(f.expand() == C))
            throw VerificationError("factor product does not expand to the input");
        return f;
    }

    friend bool operator==(const LinearFactorization& a, const LinearFactorization& b) {
        return a.leading == b.leading && a.zeros == b.zeros;
    }
    friend bool operator<(const LinearFactorization& a, const LinearFactorization& b) {
        if (a.leading < b.leading) return true;
        if (b.leading < a.leading) return false;
        return a.zeros < b.zeros;
    }

    std::string str() const {
        std::string out;
        if (!(leading == AlgebraTraits<T>::from_rational(Rational(1))))
            out += "(" + to_string(leading) + ")";
        for (const T& h : zeros)
            out += "(" + to_string(Polynomial<T>::linear_from_zero(h)) + ")";
        if (out.empty()) out = "1";
        return out;
    }
};

// Exact expansion equality.
template <class T>
bool verify(const Polynomial<T>& C, const LinearFactorization<T>& f) {
    return f.expand() == C;
}

// --- czero -------------------------------------------------------------------

enum class CzeroStatus { ok, pseudofactor, non_invertible_leading };

inline const char* czero_status_name(CzeroStatus s) {
    switch (s) {
        case CzeroStatus::ok: return "ok";
        case CzeroStatus::pseudofactor: return "pseudofactor";
        default: return "non-invertible-leading";
    }
}

template <class T>
struct CzeroResult {
    CzeroStatus status = CzeroStatus::ok;
    T zero = AlgebraTraits<T>::from_rational(Rational(0));
    Polynomial<T> remainder;  // S = lrem(C, M)
};

namespace detail {
template <class T>
void require_quadratic_norm_divisor(const Polynomial<T>& C, const RealPolynomial& M) {
    if (M.degree() != 2 || !M.is_monic())
        throw NonRealFactorNormError("czero requires a monic quadratic M");
    auto nu = is_real_norm(C);
    if (!nu)
        throw NonRealNormError("norm polynomial of C is not real");
    if (!divides_exactly(M, *nu))
        throw NonRealFactorNormError("M does not divide the norm polynomial");
}
} // namespace detail

// The unique zero of S = lrem(C, M) for a monic quadratic real factor M of
// nu(C): h = -s1^-1 s0.  Status pseudofactor when nu(S) = 0, and
// non-invertible-leading when nu(S) != 0 but the leading coefficient of S
// is not invertible (possible outside division rings).
template <class T>
CzeroResult<T> czero_checked(const Polynomial<T>& C, const RealPolynomial& M) {
    detail::require_quadratic_norm_divisor(C, M);

    CzeroResult<T> res;
    res.remainder = lrem(C, promote<T>(M));

    if (norm_poly(res.remainder).is_zero()) {
        res.status = CzeroStatus::pseudofactor;
        return res;
    }
    T s1 = res.remainder.coeff(1);
    auto s1inv = try_inverse(s1);
    if (!s1inv) {
        res.status = CzeroStatus::non_invertible_leading;
        return res;
    }
    res.zero = -(*s1inv * res.remainder.coeff(0));

    // The theory promises t-h is a right factor of C with norm M.
    if (!lrem(C, Polynomial<T>::linear_from_zero(res.zero)).is_zero())
        throw InternalDefectError("czero result is not a right zero of C");
    auto fn = is_real_norm(Polynomial<T>::linear_from_zero(res.zero));
    if (!fn || !(*fn == M))
        throw InternalDefectError("czero factor norm differs from M");
    return res;
}

template <class T>
T czero(const Polynomial<T>& C, const RealPolynomial& M) {
    CzeroResult<T> res = czero_checked(C, M);
    switch (res.status) {
        case CzeroStatus::ok:
            return res.zero;
        case CzeroStatus::pseudofactor:
            throw PseudofactorError("nu(S) = 0 for S = " + to_string(res.remainder));
        default:
            throw NonInvertibleLeadingError(
                "leading coefficient of S = " + to_string(res.remainder) +
                " is not invertible");
    }
}

// True iff nu(lrem(C, M)) = 0 exactly; real pseudofactors divide nu(C).
template <class T>
bool is_real_pseudofactor(const Polynomial<T>& C, const RealPolynomial& M) {
    if (M.degree() < 1 || !M.is_monic())
        throw NonRealFactorNormError("pseudofactor test requires a monic M, deg >= 1");
    return norm_poly(lrem(C, promote<T>(M))).is_zero();
}

// --- gfactor ------------------------------------------------------------------

template <class T>
struct GFactorFailure {
    int step = 0;  // 1-based peel step
    CzeroStatus status = CzeroStatus::ok;
    Polynomial<T> remainder;  // the offending S

    std::string str() const {
        return std::string(czero_status_name(status)) + " at step " +
               std::to_string(step) + ", S = " + to_string(remainder);
    }
};

template <class T>
struct GFactorResult {
    std::optional<LinearFactorization<T>> factorization;
    std::optional<GFactorFailure<T>> failure;
    // Norms of the peeled factors in peel order (right to left in the
    // factor tuple); the last entry is the implied norm of the final
    // linear factor.
    std::vector<RealPolynomial> quadratics_used;

    bool ok() const { return factorization.has_value(); }
};

namespace detail {
template <class T>
void require_gfactor_input(const Polynomial<T>& C) {
    if (C.is_zero() || C.degree() < 1)
        throw ZeroPolynomialError("gfactor needs degree >= 1");
    if (!C.is_monic()) throw NotMonicError("gfactor input must be monic");
    auto nu = is_real_norm(C);
    if (!nu || nu->is_zero())
        throw NonRealNormError("gfactor needs a real nonzero norm polynomial");
    if (mrpf(C).degree() != 0)
        throw MrpfNotTrivialError("gfactor requires mrpf C = 1; factor it out first");
}
} // namespace detail

// One run of the factorization recursion with an explicit sequence of
// quadratic choices, consumed right to left: at step k the factor t-h with
// nu(t-h) = ordering[k] is split off on the right.  deg C - 1 choices
// suffice; the final linear quotient is its own factor.
template <class T>
GFactorResult<T> gfactor(const Polynomial<T>& C,
                         std::span<const RealPolynomial> ordering) {
    detail::require_gfactor_input(C);

    GFactorResult<T> out;
    Polynomial<T> Ck = C;
    std::vector<T> peel;  // rightmost factor first

    std::size_t k = 0;
    while (Ck.degree() > 1) {
        if (k >= ordering.size())
            throw NonRealFactorNormError("ordering has fewer than deg C - 1 entries");
        CzeroResult<T> res = czero_checked(Ck, ordering[k]);
        if (res.status != CzeroStatus::ok) {
            out.failure = GFactorFailure<T>{static_cast<int>(k + 1), res.status,
                                            res.remainder};
            return out;
        }
        out.quadratics_used.push_back(ordering[k]);
        peel.push_back(res.zero);
        Ck = lquo(Ck, Polynomial<T>::linear_from_zero(res.zero));
        ++k;
    }
    if (Ck.degree() == 1) {
        T h = -Ck.coeff(0);
        peel.push_back(h);
        auto fn = is_real_norm(Ck);
        if (!fn) throw InternalDefectError("final linear quotient has non-real norm");
        out.quadratics_used.push_back(*fn);
    }

    std::vector<T> zeros(peel.rbegin(), peel.rend());
    out.factorization = LinearFactorization<T>::checked(
        C, AlgebraTraits<T>::from_rational(Rational(1)), std::move(zeros));
    return out;
}

// --- exhaustive enumeration ----------------------------------------------------

struct OrderingDiagnostic {
    std::vector<RealPolynomial> quadratics;  // peel order; full on success
    int failed_step = 0;                     // 0 = success
    std::string failure_kind;                // empty on success
    std::string failure_detail;              // printed remainder S
    int factorization_index = -1;            // into the deduplicated result list
};

template <class T>
struct AllFactorizationsResult {
    std::vector<LinearFactorization<T>> factorizations;
    std::vector<OrderingDiagnostic> diagnostics;
};

// Runs the factorization recursion over every quadratic choice of nu(C) at
// every level.  Failing orderings are recorded as diagnostics, not raised.
// Complete for division rings; over S and DH the enumeration covers every
// factorization whose factor norms are rational-certified quadratics.
template <class T>
AllFactorizationsResult<T> all_factorizations(const Polynomial<T>& C) {
    detail::require_gfactor_input(C);
    AllFactorizationsResult<T> out;
    std::vector<std::pair<LinearFactorization<T>, OrderingDiagnostic>> successes;

    struct Frame {
        Polynomial<T> C;
        std::vector<RealPolynomial> quads;
        std::vector<T> peel;
    };

    std::deque<Frame> stack;
    stack.push_back({C, {}, {}});
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();

        if (fr.C.degree() == 1) {
            T h = -fr.C.coeff(0);
            fr.peel.push_back(h);
            auto fn = is_real_norm(fr.C);
            fr.quads.push_back(*fn);
            std::vector<T> zeros(fr.peel.rbegin(), fr.peel.rend());
            OrderingDiagnostic diag;
            diag.quadratics = fr.quads;
            successes.emplace_back(
                LinearFactorization<T>::checked(
                    C, AlgebraTraits<T>::from_rational(Rational(1)), std::move(zeros)),
                std::move(diag));
            continue;
        }

        auto nu = is_real_norm(fr.C);
        if (!nu) throw InternalDefectError("intermediate quotient has non-real norm");
        for (const QuadraticChoice& choice : quadratic_choices(factor_real(*nu))) {
            CzeroResult<T> res = czero_checked(fr.C, choice.M);
            if (res.status == CzeroStatus::ok) {
                Frame next;
                next.C = lquo(fr.C, Polynomial<T>::linear_from_zero(res.zero));
                next.quads = fr.quads;
                next.quads.push_back(choice.M);
                next.peel = fr.peel;
                next.peel.push_back(res.zero);
                stack.push_back(std::move(next));
            } else {
                OrderingDiagnostic diag;
                diag.quadratics = fr.quads;
                diag.quadratics.push_back(choice.M);
                diag.failed_step = static_cast<int>(fr.quads.size()) + 1;
                diag.failure_kind = czero_status_name(res.status);
                diag.failure_detail = to_string(res.remainder);
                out.diagnostics.push_back(std::move(diag));
            }
        }
    }

    // Deduplicate by exact ordered factor tuple, sort canonically, then
    // attach the success diagnostics.
    for (auto& [fact, diag] : successes) {
        auto it = std::find(out.factorizations.begin(), out.factorizations.end(), fact);
        if (it == out.factorizations.end()) out.factorizations.push_back(fact);
    }
    std::sort(out.factorizations.begin(), out.factorizations.end());
    for (auto& [fact, diag] : successes) {
        auto it = std::find(out.factorizations.begin(), out.factorizations.end(), fact);
        diag.factorization_index =
            static_cast<int>(std::distance(out.factorizations.begin(), it));
        out.diagnostics.push_back(std::move(diag));
    }
    return out;
}

} // namespace polyfact
