#pragma once

#include "slspec/potential.hpp"

namespace slspec {

/// Index shift δₙ(α, β) solving
///   δ = (1/π) arccos(cos α / √((n+δ)² sin²α + cos²α))
///     − (1/π) arccos(cos β / √((n+δ)² sin²β + cos²β)).
struct DeltaValue {
    int n = 0;
    double value = 0.0;
    int iterations = 0;
    /// |F(δ) − δ| at the returned value.
    double residual = 0.0;
    /// Set for n ∈ {0, 1}, where the equation is only evaluated formally.
    bool extrapolated = false;
};

struct DeltaOptions {
    double tol = 1e-13;
    int max_iterations = 200;
};

/// Right-hand side F(δ) of the fixed-point equation for index n.
double delta_map(int n, double delta, const BoundaryParams& bc);

/// Plain fixed-point iteration from the asymptotic guess. Requires n ≥ 2;
/// throws ConvergenceError if the iteration cap is hit.
DeltaValue solve_delta(int n, const BoundaryParams& bc, const DeltaOptions& opts = {});

/// solve_delta for n ≥ 2. For n ∈ {0, 1} the same iteration is run formally
/// and the result is flagged extrapolated; such values are never ground truth.
DeltaValue delta_for_index(int n, const BoundaryParams& bc, const DeltaOptions& opts = {});

/// Leading closed form:
///   interior  (cot β − cot α)/(πn)
///   α = π     1/2 + cot β/(π(n+1/2))
///   β = 0     1/2 − cot α/(π(n+1/2))
///   α = π, β = 0   1
double delta_asymptotic(int n, const BoundaryParams& bc);

} // namespace slspec
