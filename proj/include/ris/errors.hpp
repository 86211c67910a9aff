#pragma once

#include <stdexcept>
#include <string>

namespace ris {

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, double value, double error_estimate)
        : std::runtime_error(what), value_(value), error_estimate_(error_estimate) {}

    double value() const noexcept { return value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double value_;
    double error_estimate_;
};

/// Interior-point iteration stalled; message carries the residuals.
class SolverFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPsd : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// No sign change of the scheme difference on the sweep grid.
class NoCrossover : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ris
