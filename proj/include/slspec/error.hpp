#pragma once

#include <stdexcept>
#include <string>

namespace slspec {

/// Base of every error raised by the library. `what()` names the failing operation.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument: out-of-domain abscissa, bad boundary angle, malformed grid.
class DomainError : public Error {
public:
    using Error::Error;
};

class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double estimate, double error_bound)
        : Error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// |y| exceeded the blow-up bound while integrating.
class BlowupError : public Error {
public:
    BlowupError(const std::string& what, double x) : Error(what), x_(x) {}
    double position() const noexcept { return x_; }

private:
    double x_;
};

/// Fixed-point or root iteration ran out of iterations.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double last_iterate, double residual)
        : Error(what), last_iterate_(last_iterate), residual_(residual) {}

    double last_iterate() const noexcept { return last_iterate_; }
    double residual() const noexcept { return residual_; }

private:
    double last_iterate_;
    double residual_;
};

class BracketError : public Error {
public:
    using Error::Error;
};

/// The located root does not carry the requested number of interior zeros.
class OscillationMismatch : public Error {
public:
    OscillationMismatch(const std::string& what, int expected, int found)
        : Error(what), expected_(expected), found_(found) {}

    int expected() const noexcept { return expected_; }
    int found() const noexcept { return found_; }

private:
    int expected_;
    int found_;
};

/// Asymptotic machinery asked to work where μ₂ ≤ 0.
class UnsupportedRegime : public Error {
public:
    using Error::Error;
};

/// Boundary pair outside the cases the k-series construction covers.
class CaseError : public Error {
public:
    using Error::Error;
};

} // namespace slspec
