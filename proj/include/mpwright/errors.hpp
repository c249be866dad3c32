#ifndef MPWRIGHT_ERRORS_HPP
#define MPWRIGHT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mpw {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameter vectors violate their constraints (lengths, positivity).
class InvalidParamsError : public Error {
public:
    using Error::Error;
};

/// A Gamma factor in a series *numerator* hit a pole: the coefficient is
/// genuinely undefined and no convention can rescue it.
class NumeratorPoleError : public Error {
public:
    NumeratorPoleError(std::string what, long k, long j)
        : Error(std::move(what)), term_index(k), factor_index(j) {}
    long term_index;    // k of the offending coefficient
    long factor_index;  // j of the offending Gamma factor, -1 if not applicable
};

class DenominatorPoleError : public Error {
public:
    using Error::Error;
};

/// Series did not meet the truncation target within the term cap.
class NoConvergenceError : public Error {
public:
    using Error::Error;
};

/// Term-wise Caputo differentiation is not defined for this exponent.
class UnsupportedExponentError : public Error {
public:
    using Error::Error;
};

/// Wraps a failure inside one stage of the operator pipeline.
class StageError : public Error {
public:
    StageError(std::size_t stage, const std::string& what)
        : Error("stage " + std::to_string(stage) + ": " + what), stage_index(stage) {}
    std::size_t stage_index;
};

}  // namespace mpw

#endif
