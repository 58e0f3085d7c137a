#pragma once

#include "slspec/delta.hpp"
#include "slspec/potential.hpp"

#include <vector>

namespace slspec {

/// Series k(x) = Σ_{n≥2} æₙ/(n+δₙ) cos (n+δₙ)x and its split k = k₁ + k₂,
///   k₁(x) = −σ(π) Σ cₙ cos (n+δₙ)x,            cₙ = sin 2πδₙ / (2(n+δₙ)),
///   k₂(x) = Σ ½∫₀^{2π} σ̃(t) cos (n+δₙ)t dt · cos (n+δₙ)x.
/// The ½ comes from substituting t = s/2 in ∫₀^π σ(t) cos 2(n+δₙ)t dt.
enum class KCase { Interior, DirichletDirichlet };

/// Interior when α, β ∈ (0, π); Dirichlet–Dirichlet when α = π, β = 0;
/// CaseError for the mixed pairs.
KCase classify_k_case(const BoundaryParams& bc);

struct KTerm {
    int n = 0;
    double nu = 0.0;          ///< n + δₙ
    double ae = 0.0;          ///< æₙ
    double c = 0.0;           ///< cₙ
    double k_coeff = 0.0;     ///< æₙ/ν
    double k1_coeff = 0.0;    ///< −σ(π) cₙ
    double k2_coeff = 0.0;    ///< ½∫₀^{2π} σ̃(t) cos νt dt
    /// k_coeff − k1_coeff − k2_coeff (integration-by-parts bookkeeping).
    double split_defect = 0.0;
};

struct KSeriesOptions {
    double tol = kDefaultTol;
    unsigned threads = 0;
};

/// Coefficients for n = 2..N, computed concurrently, returned in ascending n.
std::vector<KTerm> k_terms(const Potential& q, const BoundaryParams& bc, int N, const KSeriesOptions& opts = {});

struct KSeriesResult {
    KCase case_tag = KCase::Interior;
    std::vector<double> grid;
    std::vector<int> truncations;             ///< ascending
    std::vector<std::vector<double>> k;       ///< k[i][j]: truncation i, grid point j
    std::vector<std::vector<double>> k1;
    std::vector<std::vector<double>> k2;
    std::vector<double> closed_form;          ///< Dirichlet–Dirichlet only
    std::vector<KTerm> terms;
};

/// Partial sums for every truncation in `truncations` (default {N/4, N/2, N}),
/// summed in ascending n. Requires 2 ≤ N ≤ 400.
KSeriesResult k_partial_sum(const Potential& q, const BoundaryParams& bc, int N, const std::vector<double>& grid,
                            std::vector<int> truncations = {}, const KSeriesOptions& opts = {});

std::vector<double> k1_partial_sum(const Potential& q, const BoundaryParams& bc, int N,
                                   const std::vector<double>& grid, const KSeriesOptions& opts = {});
std::vector<double> k2_partial_sum(const Potential& q, const BoundaryParams& bc, int N,
                                   const std::vector<double>& grid, const KSeriesOptions& opts = {});

/// Dirichlet–Dirichlet limit of k₂ via the even part of the Fourier series of σ̃:
///   (π/2)[(σ̃(x) + σ̃(2π−x))/2 − a₀/2 − a₁ cos x − a₂ cos 2x],
///   aₘ = (1/π)∫₀^{2π} σ̃(t) cos mt dt.
std::vector<double> k2_closed_form_dd(const Potential& q, const BoundaryParams& bc, const std::vector<double>& grid,
                                      double tol = kDefaultTol);

/// Evidence (not proof) of absolute continuity of the limit on [a, b].
struct ACReport {
    double a = 0.0;
    double b = 0.0;
    std::vector<double> variations;  ///< total variation per truncation level
    double total_variation = 0.0;    ///< finest level
    /// |V(S_N) − V(S_{N/2})| / V(S_{N/2}) for the two finest levels (0 when V vanishes).
    double variation_change = 0.0;
    double max_jump = 0.0;           ///< finest level, between adjacent grid points
};

/// `levels[i][j]` holds partial sum i (ascending truncation) at grid[j].
ACReport ac_diagnostic(const std::vector<double>& grid, const std::vector<std::vector<double>>& levels, double a,
                       double b);

/// sup over grid points in [a, b] of |u − v|.
double sup_distance(const std::vector<double>& grid, const std::vector<double>& u, const std::vector<double>& v,
                    double a, double b);

/// `points` equally spaced abscissae from a to b inclusive.
std::vector<double> uniform_grid(double a, double b, int points);

inline constexpr int kDefaultKGridPoints = 2048;

} // namespace slspec
