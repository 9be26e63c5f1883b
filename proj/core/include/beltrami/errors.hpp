#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beltrami {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive quadrature ran out of subdivision budget.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// An integrand (or sampled field) returned NaN/Inf.
class NonFiniteSample : public Error {
public:
    using Error::Error;
};

/// Evaluation requested outside the interval a table or window covers.
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// Expression text could not be parsed; `position` is the 0-based offset
/// of the offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A profile violates its domain requirements (vanishing or non-finite alpha).
class DomainError : public Error {
public:
    using Error::Error;
};

/// c1*sin(A) + c2*cos(A) has no sign-definite window next to y_ref.
class NoPositivityWindow : public Error {
public:
    using Error::Error;
};

/// The compatibility condition dy(Re Phi) = dx(Im Phi) fails on the grid.
class CompatibilityError : public Error {
public:
    CompatibilityError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_ = 0.0;
};

/// A field handed to a transfer is not a solution of its equation.
class ResidualError : public Error {
public:
    using Error::Error;
};

/// Collocation matrix condition estimate exceeds the usable range.
class IllConditioned : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Formal-power order above the built n_max was requested.
class NOrderExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed run configuration (CLI exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace beltrami
