#include "slspec/spectrum.hpp"

#include "slspec/error.hpp"
#include "slspec/parallel.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace slspec {

namespace {

struct Sample {
    double phi;  // Φ(μ)
    int zeros;   // interior zeros of φ(·, μ)
};

// nullopt when the shot blows up, which only happens far below the spectrum.
std::optional<Sample> sample(const Potential& q, const BoundaryParams& bc, double mu, const SolverOptions& opts)
{
    const auto a = bc.alpha_sc();
    const auto b = bc.beta_sc();
    try {
        const auto end = shoot(q, mu, true, a.sin, -a.cos, opts);
        return Sample{end.y * b.cos + end.yprime * b.sin, end.zero_count};
    } catch (const BlowupError&) {
        return std::nullopt;
    }
}

bool opposite(double a, double b) { return (a < 0.0) != (b < 0.0); }

double refine_root(const Potential& q, const BoundaryParams& bc, double lo, double hi, const SpectrumOptions& opts)
{
    auto f = [&](double mu) { return char_function(q, bc, mu, opts.solver); };
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!opposite(flo, fhi)) throw BracketError("find_eigenvalue: bracket does not enclose a sign change");

    while (hi - lo > opts.bisect_width) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (opposite(flo, fm)) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }

    // Secant from the two bracket ends, falling back to bisection whenever an
    // iterate leaves the bracket.
    double x0 = lo, f0 = flo, x1 = hi, f1 = fhi;
    for (int it = 0; it < 100; ++it) {
        double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!std::isfinite(x2) || x2 <= lo || x2 >= hi) x2 = 0.5 * (lo + hi);
        const double f2 = f(x2);
        if (f2 == 0.0) return x2;
        if (opposite(flo, f2)) {
            hi = x2;
            fhi = f2;
        } else {
            lo = x2;
            flo = f2;
        }
        if (std::abs(x2 - x1) <= opts.tol || hi - lo <= opts.tol) return x2;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> scan_bracket(const Potential& q, const BoundaryParams& bc, int n, const SpectrumOptions& opts)
{
    const double start = spectral_lower_bound(q);
    constexpr long kMaxSteps = 400000;
    std::optional<Sample> prev;
    double prev_mu = start;
    int changes = 0;
    for (long k = 0; k < kMaxSteps; ++k) {
        const double mu = start + static_cast<double>(k) * opts.scan_step;
        const auto s = sample(q, bc, mu, opts.solver);
        if (!s) continue;
        if (prev && opposite(prev->phi, s->phi) && ++changes == n + 1) return {prev_mu, mu};
        prev = s;
        prev_mu = mu;
    }
    std::ostringstream msg;
    msg << "bracket_eigenvalue: scan found no sign change for n = " << n;
    throw BracketError(msg.str());
}

int zeros_at(const Potential& q, const BoundaryParams& bc, double mu, const SolverOptions& opts)
{
    const auto s = sample(q, bc, mu, opts);
    return s ? s->zeros : -1;
}

// Smallest μ (to bisection accuracy) with zeros_at(μ) ≥ k, given
// zeros_at(a) < k ≤ zeros_at(b).
double count_threshold(const Potential& q, const BoundaryParams& bc, double a, double b, int k,
                       const SolverOptions& opts)
{
    for (int it = 0; it < 200 && b - a > 1e-9 * std::max(1.0, std::abs(b)); ++it) {
        const double mid = 0.5 * (a + b);
        if (zeros_at(q, bc, mid, opts) >= k)
            b = mid;
        else
            a = mid;
    }
    return b;
}

// The eigenvalue with n interior zeros lies in [first μ with n zeros, first μ
// with n+1 zeros], and Φ changes sign across that interval.
std::pair<double, double> recover_bracket(const Potential& q, const BoundaryParams& bc, int n, double near,
                                          const SpectrumOptions& opts)
{
    const double a = spectral_lower_bound(q);
    double b = std::max(near, 1.0);
    int doublings = 0;
    while (zeros_at(q, bc, b, opts.solver) < n + 1) {
        b = 2.0 * b + (n + 2.0) * (n + 2.0);
        if (++doublings > 60) throw BracketError("find_eigenvalue: oscillation count never exceeds n");
    }
    const double lo = n == 0 ? a : count_threshold(q, bc, a, b, n, opts.solver);
    const double hi = count_threshold(q, bc, lo, b, n + 1, opts.solver);
    return {lo, hi};
}

} // namespace

double char_function(const Potential& q, const BoundaryParams& bc, double mu, const SolverOptions& opts)
{
    const auto a = bc.alpha_sc();
    const auto b = bc.beta_sc();
    const auto end = shoot(q, mu, true, a.sin, -a.cos, opts);
    return end.y * b.cos + end.yprime * b.sin;
}

double char_function_from_right(const Potential& q, const BoundaryParams& bc, double mu, const SolverOptions& opts)
{
    const auto a = bc.alpha_sc();
    const auto b = bc.beta_sc();
    const auto end = shoot(q, mu, false, b.sin, -b.cos, opts);
    return -(end.y * a.cos + end.yprime * a.sin);
}

double spectral_lower_bound(const Potential& q)
{
    const double l1 = CumulativeIntegrals(q).l1_norm();
    return -l1 * (1.0 + l1) - 1.0;
}

std::pair<double, double> bracket_eigenvalue(const Potential& q, const BoundaryParams& bc, int n,
                                             const SpectrumOptions& opts)
{
    if (n < 0) throw DomainError("bracket_eigenvalue: n must be non-negative");
    if (n < 2) return scan_bracket(q, bc, n, opts);

    const double nu = n + solve_delta(n, bc).value;
    const double center = nu + mean_q(q) / (2.0 * nu);
    const double floor_mu = spectral_lower_bound(q);
    double w = opts.bracket_half_width;
    for (int k = 0; k <= opts.max_widen; ++k, w *= 1.5) {
        const double left = center - w;
        const double lo = left > 0.0 ? left * left : floor_mu;
        const double hi = (center + w) * (center + w);
        const auto slo = sample(q, bc, lo, opts.solver);
        const auto shi = sample(q, bc, hi, opts.solver);
        if (slo && shi && opposite(slo->phi, shi->phi)) return {lo, hi};
    }
    std::ostringstream msg;
    msg << "bracket_eigenvalue: no sign change around the asymptotic centre for n = " << n;
    throw BracketError(msg.str());
}

Eigenpair find_eigenvalue(const Potential& q, const BoundaryParams& bc, int n, const SpectrumOptions& opts)
{
    if (n < 0) throw DomainError("find_eigenvalue: n must be non-negative");
    if (!(opts.tol > 0.0)) throw DomainError("find_eigenvalue: tol must be positive");

    Eigenpair pair;
    pair.n = n;
    pair.delta = delta_for_index(n, bc);

    std::pair<double, double> bracket;
    try {
        bracket = bracket_eigenvalue(q, bc, n, opts);
    } catch (const BracketError&) {
        // Far from the asymptotic regime (large negative q): fall back to the
        // oscillation count, which needs no estimate of where μₙ lies.
        bracket = recover_bracket(q, bc, n, 1.0, opts);
    }
    double mu = refine_root(q, bc, bracket.first, bracket.second, opts);
    int zeros = zeros_at(q, bc, mu, opts.solver);
    if (zeros != n) {
        bracket = recover_bracket(q, bc, n, mu, opts);
        mu = refine_root(q, bc, bracket.first, bracket.second, opts);
        zeros = zeros_at(q, bc, mu, opts.solver);
        if (zeros != n) {
            std::ostringstream msg;
            msg << "find_eigenvalue: eigenfunction for n = " << n << " has " << zeros << " interior zeros";
            throw OscillationMismatch(msg.str(), n, zeros);
        }
    }
    if (n >= 2 && mu <= 0.0) {
        std::ostringstream msg;
        msg << "find_eigenvalue: mu_" << n << " = " << mu << " <= 0; asymptotic regime unsupported";
        throw UnsupportedRegime(msg.str());
    }

    pair.mu = mu;
    pair.negative_mu = mu < 0.0;
    pair.lambda = std::sqrt(std::abs(mu));
    pair.bracket_lo = bracket.first;
    pair.bracket_hi = bracket.second;
    pair.char_residual = std::abs(char_function(q, bc, mu, opts.solver));
    pair.zero_count = zeros;
    return pair;
}

SolutionTrace eigenfunction(const Eigenpair& pair, const Potential& q, const BoundaryParams& bc,
                            const SolverOptions& opts)
{
    return phi(q, pair.mu, bc.alpha(), opts);
}

SolutionTrace eigenfunction_psi(const Eigenpair& pair, const Potential& q, const BoundaryParams& bc,
                                const SolverOptions& opts)
{
    return psi(q, pair.mu, bc.beta(), opts);
}

Spectrum compute_spectrum(const Potential& q, const BoundaryParams& bc, int n_min, int n_max,
                          const SpectrumOptions& opts)
{
    if (n_min < 0 || n_max < n_min) throw DomainError("compute_spectrum: need 0 <= n_min <= n_max");
    std::vector<Eigenpair> pairs(static_cast<std::size_t>(n_max - n_min + 1));
    parallel_for(
        n_min, n_max + 1, [&](int n) { pairs[static_cast<std::size_t>(n - n_min)] = find_eigenvalue(q, bc, n, opts); },
        opts.threads);
    for (std::size_t i = 1; i < pairs.size(); ++i)
        if (!(pairs[i].mu > pairs[i - 1].mu)) throw Error("compute_spectrum: eigenvalues not strictly increasing");
    return {bc, q, std::move(pairs)};
}

} // namespace slspec
