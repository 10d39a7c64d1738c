#pragma once

#include <stdexcept>
#include <string>

namespace upb {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched vector lengths, matrix shapes, or vertex counts.
struct DimensionError : Error {
    using Error::Error;
};

/// Parameter outside the domain of an operation (d too small, k = 0, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Constraint rows span the full space; no orthogonal vector exists.
struct NoSolutionError : Error {
    using Error::Error;
};

/// Rank-deficient input where a full-rank matrix is required.
struct DegenerateError : Error {
    using Error::Error;
};

/// A randomized constructor exhausted its retry budget.
struct ConstructionError : Error {
    ConstructionError(const std::string& msg, double pattern_residual, double orth_residual)
        : Error(msg), best_pattern_residual(pattern_residual), best_orth_residual(orth_residual) {}
    explicit ConstructionError(const std::string& msg) : Error(msg) {}
    double best_pattern_residual = 0.0;
    double best_orth_residual = 0.0;
};

/// A deterministic construction failed its own certification sweep.
struct CertificationError : Error {
    using Error::Error;
};

/// Exact decision would exceed the enumeration budget.
struct ResourceError : Error {
    using Error::Error;
};

/// Dimension vector not covered by any construction in this library.
struct UnsupportedCaseError : Error {
    using Error::Error;
};

/// A builder's mandatory self-verification failed.
struct VerificationError : Error {
    using Error::Error;
};

/// Malformed matrix text or product-basis JSON.
struct ParseError : Error {
    using Error::Error;
};

/// Distinct-bases requirement violated (some overlap hits 0 or 1).
struct DegeneracyError : Error {
    using Error::Error;
};

} // namespace upb
