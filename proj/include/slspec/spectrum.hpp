#pragma once

#include "slspec/delta.hpp"
#include "slspec/odesolve.hpp"
#include "slspec/potential.hpp"

#include <utility>
#include <vector>

namespace slspec {

struct SpectrumOptions {
    SolverOptions solver;
    /// Final width of the root in μ.
    double tol = 1e-10;
    /// Bisection stops at this width, the secant takes over.
    double bisect_width = 1e-6;
    /// μ step of the low-index scan.
    double scan_step = 0.05;
    /// Half width w of the asymptotic bracket in λ.
    double bracket_half_width = 0.4;
    int max_widen = 30;
    unsigned threads = 0;
};

struct Eigenpair {
    int n = 0;
    double mu = 0.0;
    /// √μ when μ ≥ 0, √(−μ) otherwise (see negative_mu).
    double lambda = 0.0;
    bool negative_mu = false;
    DeltaValue delta;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double char_residual = 0.0;
    /// Interior zeros of φ(·, μ); equals n for every pair returned.
    int zero_count = 0;
};

struct Spectrum {
    BoundaryParams bc;
    Potential q;
    std::vector<Eigenpair> pairs;
};

/// Φ(μ) = φ(π, μ) cos β + φ'(π, μ) sin β, by one shot from x = 0.
double char_function(const Potential& q, const BoundaryParams& bc, double mu, const SolverOptions& opts = {});

/// The same function computed from the right end:
///   −[ψ(0, μ) cos α + ψ'(0, μ) sin α],
/// which is −W(φ, ψ) evaluated at x = 0.
double char_function_from_right(const Potential& q, const BoundaryParams& bc, double mu,
                                const SolverOptions& opts = {});

/// Lower bound used to start the low-index scan: −‖q‖₁(1 + ‖q‖₁) − 1.
double spectral_lower_bound(const Potential& q);

/// μ-interval on which Φ changes sign around μₙ. For n ≥ 2 the bracket is
/// centred on λ* = n + δₙ + [q]/(2(n+δₙ)) and widened until the sign changes;
/// for n ∈ {0, 1} the μ axis is scanned upward from spectral_lower_bound.
std::pair<double, double> bracket_eigenvalue(const Potential& q, const BoundaryParams& bc, int n,
                                             const SpectrumOptions& opts = {});

/// Root of Φ with exactly n interior zeros. If the asymptotic bracket caught a
/// neighbour or found no sign change, the index is recovered by bisecting on
/// the oscillation count. Throws UnsupportedRegime when n ≥ 2 and μₙ ≤ 0.
Eigenpair find_eigenvalue(const Potential& q, const BoundaryParams& bc, int n, const SpectrumOptions& opts = {});

/// φₙ (left-normalised) and ψₙ (right-normalised) on the integration grid.
SolutionTrace eigenfunction(const Eigenpair& pair, const Potential& q, const BoundaryParams& bc,
                            const SolverOptions& opts = {});
SolutionTrace eigenfunction_psi(const Eigenpair& pair, const Potential& q, const BoundaryParams& bc,
                                const SolverOptions& opts = {});

/// Eigenpairs n_min..n_max, computed concurrently and returned in index order.
Spectrum compute_spectrum(const Potential& q, const BoundaryParams& bc, int n_min, int n_max,
                          const SpectrumOptions& opts = {});

} // namespace slspec
