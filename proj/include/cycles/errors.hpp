#ifndef CYCLES_ERRORS_HPP
#define CYCLES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cycles {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Config / input validation problems (CLI exit code 2).
struct ValidationError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

// Numerical stage failures (CLI exit code 3).
struct NumericError : Error {
    using Error::Error;
};

// Resultant of two polynomials is identically zero: they share a component.
struct CommonComponentError : NumericError {
    using NumericError::NumericError;
};

// A bracketed root did not reach the requested residual tolerance.
struct ConvergenceFailure : NumericError {
    using NumericError::NumericError;
};

// First-integral denominator too close to zero at the evaluation point.
struct DenominatorSingular : NumericError {
    using NumericError::NumericError;
};

// Trimmed closing polynomial does not have the expected total degree.
struct DegreeMismatch : NumericError {
    using NumericError::NumericError;
};

// More admissible candidates than the Bezout-derived maximum: numerical artifact.
struct BoundViolation : NumericError {
    using NumericError::NumericError;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace cycles

#endif
