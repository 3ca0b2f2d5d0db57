#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsurf {

/// Malformed curve expression. position is a 0-based byte offset into the source.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("at position " + std::to_string(position) + ": " + message),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Numerical failure: a computation the caller cannot recover from.
class NumericError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class CurveNotSquarefree : public NumericError {
public:
    CurveNotSquarefree() : NumericError("curve is not squarefree in y (discriminant vanishes identically)") {}
};

class DegenerateLeadingCoefficient : public NumericError {
    using NumericError::NumericError;
};

class StepTooLarge : public NumericError {
    using NumericError::NumericError;
};

/// Malformed or incompatible mesh document.
class FormatError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rsurf
