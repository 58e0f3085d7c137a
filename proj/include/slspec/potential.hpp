#pragma once

#include "slspec/quadrature.hpp"

#include <memory>
#include <numbers>
#include <string>
#include <vector>

namespace slspec {

inline constexpr double kPi = std::numbers::pi;

/// sin and cos of a boundary angle with the canonical angles 0, π/2, π snapped
/// to exact values (so sin π is 0, not 1.2e-16).
struct SinCos {
    double sin;
    double cos;
};
SinCos exact_sincos(double angle);

/// The pair (α, β) of the separated boundary conditions
///   y(0) cos α + y'(0) sin α = 0,   α ∈ (0, π],
///   y(π) cos β + y'(π) sin β = 0,   β ∈ [0, π).
class BoundaryParams {
public:
    BoundaryParams(double alpha, double beta);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    SinCos alpha_sc() const noexcept { return exact_sincos(alpha_); }
    SinCos beta_sc() const noexcept { return exact_sincos(beta_); }

    bool alpha_is_pi() const noexcept { return alpha_ == kPi; }
    bool beta_is_zero() const noexcept { return beta_ == 0.0; }

private:
    double alpha_;
    double beta_;
};

/// Real summable potential on [0, π]. Cheap to copy; the payload is shared and
/// immutable.
class Potential {
public:
    enum class Kind { Named, Grid };
    enum class Name { Zero, Constant, Step, SmoothTest };

    static Potential zero();
    static Potential constant(double c);
    /// c on [0, x0], 0 on (x0, π].
    static Potential step(double c, double x0);
    /// Σ_k coeffs[k] cos(k x).
    static Potential smooth_test(std::vector<double> coeffs);
    /// Piecewise-linear interpolant; xs strictly increasing, xs.front() = 0,
    /// xs.back() = π, all samples finite.
    static Potential grid(std::vector<double> xs, std::vector<double> qs);

    /// q + c.
    Potential shifted(double c) const;

    double operator()(double x) const;

    Kind kind() const noexcept;
    Name name() const;  ///< Named potentials only.
    const std::vector<double>& params() const noexcept;
    const std::vector<double>& xs() const noexcept;
    const std::vector<double>& qs() const noexcept;
    double offset() const noexcept;
    std::string describe() const;

    /// Abscissae in (0, π) where q or q' may jump.
    const std::vector<double>& breakpoints() const noexcept;

private:
    struct Impl;
    explicit Potential(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

/// Tabulated cumulative integrals of a potential:
///   σ₀(x) = ∫₀ˣ |q|,   σ(x) = ∫₀ˣ (π − t) q(t) dt,   σ̃(x) = σ(x/2) on [0, 2π],
///   Q(x) = ∫₀ˣ q,      [q] = Q(π)/π.
/// Values between table nodes are completed with a local Gauss–Legendre rule.
class CumulativeIntegrals {
public:
    explicit CumulativeIntegrals(const Potential& q, int cells = 2048);

    double sigma0(double x) const;
    double sigma(double x) const;
    double sigma_tilde(double x) const;
    double integral_q(double x) const;
    double mean_q() const noexcept { return mean_q_; }
    double l1_norm() const noexcept { return l1_norm_; }

private:
    enum Column { kAbs = 0, kWeighted = 1, kPlain = 2 };
    double eval(Column col, double x) const;

    Potential q_;
    std::vector<double> nodes_;
    std::vector<double> table_[3];
    double mean_q_ = 0.0;
    double l1_norm_ = 0.0;
};

/// [q] = (1/π) ∫₀^π q.
double mean_q(const Potential& q, double tol = kDefaultTol);

CumulativeIntegrals sigma_functions(const Potential& q);

} // namespace slspec
