#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace polyfact {

// Base class for all library errors.  Every error carries a stable,
// machine-readable code (used by the CLI for exit status and JSON output)
// in addition to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define POLYFACT_DEFINE_ERROR(Name, code_str)                                 \
    class Name : public Error {                                               \
    public:                                                                    \
        explicit Name(const std::string& msg) : Error(code_str, msg) {}       \
    }

POLYFACT_DEFINE_ERROR(NotInvertibleError, "not-invertible");
POLYFACT_DEFINE_ERROR(SignatureMismatchError, "signature-mismatch");
POLYFACT_DEFINE_ERROR(AlgebraMismatchError, "algebra-mismatch");
POLYFACT_DEFINE_ERROR(LeadingCoefficientNotInvertibleError,
                      "leading-coefficient-not-invertible");
POLYFACT_DEFINE_ERROR(ZeroPolynomialError, "zero-polynomial");
POLYFACT_DEFINE_ERROR(DegenerateTransformError, "degenerate-transform");
POLYFACT_DEFINE_ERROR(OddBladePresentError, "odd-blade-present");
POLYFACT_DEFINE_ERROR(ExactFactorizationUnsupportedError,
                      "exact-factorization-unsupported");
POLYFACT_DEFINE_ERROR(MrpfNotTrivialError, "mrpf-not-trivial");
POLYFACT_DEFINE_ERROR(NonRealNormError, "non-real-norm");
POLYFACT_DEFINE_ERROR(NotMonicError, "not-monic");
POLYFACT_DEFINE_ERROR(PseudofactorError, "pseudofactor");
POLYFACT_DEFINE_ERROR(NonInvertibleLeadingError, "non-invertible-leading");
POLYFACT_DEFINE_ERROR(MultiplicityViolationError, "multiplicity-violation");
POLYFACT_DEFINE_ERROR(IrrationalRealRootError, "irrational-real-root");
POLYFACT_DEFINE_ERROR(PrimalMismatchError, "primal-mismatch");
POLYFACT_DEFINE_ERROR(NonRealFactorNormError, "non-real-factor-norm");
POLYFACT_DEFINE_ERROR(VerificationError, "verification-failed");
POLYFACT_DEFINE_ERROR(UnsupportedOperationError, "unsupported-operation");

// Raised when an internal invariant that the theory guarantees fails to
// hold; always indicates a bug, never bad user input.
POLYFACT_DEFINE_ERROR(InternalDefectError, "internal-defect");

#undef POLYFACT_DEFINE_ERROR

// Syntax errors carry the offset into the source text.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error("parse-error", msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace polyfact
