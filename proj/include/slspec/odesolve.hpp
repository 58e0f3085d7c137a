#pragma once

#include "slspec/potential.hpp"

#include <vector>

namespace slspec {

enum class Stepper {
    /// Fourth-order Magnus (two Gauss points, exact 2×2 exponential). Exact
    /// when q is constant across a step.
    Magnus4,
    /// Classical Runge–Kutta; kept as an independent cross-check.
    RK4,
};

struct SolverOptions {
    int grid_size = 4096;
    double blowup = 1e12;
    Stepper stepper = Stepper::Magnus4;
};

/// Solution of -y'' + q y = μ y sampled on an increasing grid of [0, π].
/// Values between nodes are produced by one extra step from the node to the
/// left, so `at` has the accuracy of the integrator itself.
class SolutionTrace {
public:
    struct Value {
        double y;
        double yprime;
    };

    SolutionTrace(Potential q, double mu, Stepper stepper, std::vector<double> grid,
                  std::vector<double> y, std::vector<double> yprime);

    const std::vector<double>& grid() const noexcept { return grid_; }
    const std::vector<double>& y() const noexcept { return y_; }
    const std::vector<double>& yprime() const noexcept { return yprime_; }
    double mu() const noexcept { return mu_; }
    const Potential& potential() const noexcept { return q_; }

    Value at(double x) const;
    Value front() const noexcept { return {y_.front(), yprime_.front()}; }
    Value back() const noexcept { return {y_.back(), yprime_.back()}; }

    /// Sign changes of y strictly inside (0, π).
    int interior_zero_count() const;

private:
    Potential q_;
    double mu_;
    Stepper stepper_;
    std::vector<double> grid_;
    std::vector<double> y_;
    std::vector<double> yprime_;
};

struct FundamentalSystem {
    SolutionTrace y1, y2, y3, y4;
};

/// Integration grid used for spectral parameter mu: uniform with spacing
/// min(π/grid_size, (2π/λ)/16), merged with the potential's break points.
std::vector<double> integration_grid(const Potential& q, double mu, int grid_size);

/// Solution with y(x₀) = y0, y'(x₀) = yp0, x₀ = 0 if at_left else π. Throws
/// BlowupError once |y| passes opts.blowup.
SolutionTrace solve_ivp(const Potential& q, double mu, bool at_left, double y0, double yp0,
                        const SolverOptions& opts = {});

/// Far-end value only, no trace stored. `zero_count` counts interior sign changes.
struct Endpoint {
    double y;
    double yprime;
    int zero_count;
};
Endpoint shoot(const Potential& q, double mu, bool at_left, double y0, double yp0,
               const SolverOptions& opts = {});

/// φ(0) = sin α, φ'(0) = -cos α.
SolutionTrace phi(const Potential& q, double mu, double alpha, const SolverOptions& opts = {});
/// ψ(π) = sin β, ψ'(π) = -cos β.
SolutionTrace psi(const Potential& q, double mu, double beta, const SolverOptions& opts = {});

FundamentalSystem fundamental_system(const Potential& q, double mu, const SolverOptions& opts = {});

/// Partial sum S₀ + … + S_K of the successive-approximation series for y₂
/// at real λ ≥ 1, together with the tail bound
///   Σ_{k>K} σ₀(x)^k / (λ^{k+1} k!)
/// at every grid node.
struct PicardResult {
    SolutionTrace trace;
    std::vector<double> certificate;
};
PicardResult picard_y2(const Potential& q, double lambda, int K, int grid_size = 4096);

/// Tail Σ_{k>K} s^k / (λ^{k+1} k!).
double picard_tail_bound(double sigma0, double lambda, int K);

/// A(x,λ) = Q(x) sin λx + ∫₀ˣ q(t) sin λ(x−2t) dt,   Q(x) = ∫₀ˣ q.
double kernel_A(const Potential& q, double lambda, double x, double tol = kDefaultTol);
/// B(x,λ) = Q(x) cos λx − ∫₀ˣ q(t) cos λ(x−2t) dt.
double kernel_B(const Potential& q, double lambda, double x, double tol = kDefaultTol);

} // namespace slspec
