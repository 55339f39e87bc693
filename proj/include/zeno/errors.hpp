#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid parameters, files or command lines.
struct ConfigError : Error {
    using Error::Error;
};

// Anything that goes wrong while computing.
struct NumericError : Error {
    using Error::Error;
};

// Evaluation at a pole of the form factor or at a branch point.
struct SingularityError : NumericError {
    using NumericError::NumericError;
};

// A first-sheet evaluation requested exactly on a branch cut.
struct CutError : NumericError {
    using NumericError::NumericError;
};

struct QuadratureError : NumericError {
    QuadratureError(const std::string& what, double achieved, double requested)
        : NumericError(what), achieved_error(achieved), requested_error(requested) {}
    double achieved_error;
    double requested_error;
};

struct ConvergenceError : NumericError {
    using NumericError::NumericError;
};

struct FitError : NumericError {
    using NumericError::NumericError;
};

} // namespace zeno
