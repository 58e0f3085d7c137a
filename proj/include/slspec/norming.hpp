#pragma once

#include "slspec/delta.hpp"
#include "slspec/spectrum.hpp"

#include <optional>

namespace slspec {

struct NormingOptions {
    SolverOptions solver;
    double tol = kDefaultTol;
};

/// aₙ = ∫₀^π φₙ², bₙ = ∫₀^π ψₙ², by oscillation-aware quadrature of the traces.
double norming_a(const Potential& q, const BoundaryParams& bc, const Eigenpair& pair, const NormingOptions& opts = {});
double norming_b(const Potential& q, const BoundaryParams& bc, const Eigenpair& pair, const NormingOptions& opts = {});

/// æₙ = −½ ∫₀^π (π − t) q(t) sin 2(n + δₙ)t dt. Requires n ≥ 2.
double ae_n(const Potential& q, const DeltaValue& delta, double tol = kDefaultTol);

/// æ̃ₙ: the same integral at the true frequency λₙ.
double ae_tilde_n(const Potential& q, double lambda_n, double tol = kDefaultTol);

/// Leading norming-constant model with the O(1/n²) remainders dropped:
///   (π/2)[1 + 2æ/(πν)] sin²θ + (π/(2ν²))[1 + 2æ/(πν)] cos²θ,  ν = n + δₙ,
/// with θ = α for aₙ and θ = β for bₙ.
double model_a(const BoundaryParams& bc, const DeltaValue& delta, double ae);
double model_b(const BoundaryParams& bc, const DeltaValue& delta, double ae);

/// Remainders recovered from a measured norming constant. Only the combined
/// defect D = measured − model is observable; it is scaled by the sin² weight
/// when sin θ ≠ 0 and by the cos²/ν² weight when θ is π (a) or 0 (b).
struct Remainders {
    double defect = 0.0;
    std::optional<double> sin_part;  ///< rₙ or pₙ
    std::optional<double> cos_part;  ///< r̃ₙ or p̃ₙ
    /// Both sin² and cos² terms are active, so the split is a convention.
    bool combined = false;
};
Remainders extract_remainders_a(double a_n, double model, const BoundaryParams& bc, const DeltaValue& delta);
Remainders extract_remainders_b(double b_n, double model, const BoundaryParams& bc, const DeltaValue& delta);

struct NormingRecord {
    int n = 0;
    double a_n = 0.0;
    double b_n = 0.0;
    double ae_n = 0.0;
    double model_a = 0.0;
    double model_b = 0.0;
    Remainders rem_a;  ///< rₙ, r̃ₙ
    Remainders rem_b;  ///< pₙ, p̃ₙ
};

/// Full record for a certified eigenpair with n ≥ 2.
NormingRecord norming_record(const Potential& q, const BoundaryParams& bc, const Eigenpair& pair,
                             const NormingOptions& opts = {});

} // namespace slspec
