#include "slspec/kseries.hpp"

#include "slspec/error.hpp"
#include "slspec/norming.hpp"
#include "slspec/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace slspec {

namespace {

std::vector<double> doubled_breaks(const Potential& q)
{
    std::vector<double> out;
    for (double b : q.breakpoints()) out.push_back(2.0 * b);
    return out;
}

double sigma_tilde_cos_moment(const CumulativeIntegrals& sig, const std::vector<double>& breaks, double freq,
                              double tol)
{
    QuadOptions opts;
    opts.tol = tol;
    opts.omega = freq;
    opts.breaks = breaks;
    return integrate([&](double t) { return sig.sigma_tilde(t) * std::cos(freq * t); }, 0.0, 2.0 * kPi, opts);
}

void check_truncation(int N)
{
    if (N < 2 || N > 400) throw DomainError("k-series: truncation N must lie in [2, 400]");
}

double total_variation(const std::vector<double>& grid, const std::vector<double>& v, double a, double b,
                       double* max_jump)
{
    double tv = 0.0;
    double jump = 0.0;
    bool have_prev = false;
    double prev = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        if (grid[j] < a || grid[j] > b) continue;
        if (have_prev) {
            const double d = std::abs(v[j] - prev);
            tv += d;
            jump = std::max(jump, d);
        }
        prev = v[j];
        have_prev = true;
    }
    if (max_jump) *max_jump = jump;
    return tv;
}

} // namespace

KCase classify_k_case(const BoundaryParams& bc)
{
    if (bc.alpha_is_pi() && bc.beta_is_zero()) return KCase::DirichletDirichlet;
    if (!bc.alpha_is_pi() && !bc.beta_is_zero()) return KCase::Interior;
    throw CaseError("k-series: only alpha, beta in (0, pi) or (alpha, beta) = (pi, 0) are covered");
}

std::vector<KTerm> k_terms(const Potential& q, const BoundaryParams& bc, int N, const KSeriesOptions& opts)
{
    classify_k_case(bc);
    check_truncation(N);
    const CumulativeIntegrals sig(q);
    const double sigma_pi = sig.sigma(kPi);
    const auto breaks = doubled_breaks(q);

    std::vector<KTerm> terms(static_cast<std::size_t>(N - 1));
    parallel_for(
        2, N + 1,
        [&](int n) {
            const DeltaValue d = solve_delta(n, bc);
            KTerm t;
            t.n = n;
            t.nu = n + d.value;
            t.ae = ae_n(q, d, opts.tol);
            t.c = std::sin(2.0 * kPi * d.value) / (2.0 * t.nu);
            t.k_coeff = t.ae / t.nu;
            t.k1_coeff = -sigma_pi * t.c;
            t.k2_coeff = 0.5 * sigma_tilde_cos_moment(sig, breaks, t.nu, opts.tol);
            t.split_defect = t.k_coeff - t.k1_coeff - t.k2_coeff;
            terms[static_cast<std::size_t>(n - 2)] = t;
        },
        opts.threads);
    return terms;
}

KSeriesResult k_partial_sum(const Potential& q, const BoundaryParams& bc, int N, const std::vector<double>& grid,
                            std::vector<int> truncations, const KSeriesOptions& opts)
{
    check_truncation(N);
    KSeriesResult res;
    res.case_tag = classify_k_case(bc);
    res.grid = grid;
    if (truncations.empty()) truncations = {std::max(2, N / 4), std::max(2, N / 2), N};
    std::sort(truncations.begin(), truncations.end());
    truncations.erase(std::unique(truncations.begin(), truncations.end()), truncations.end());
    for (int t : truncations)
        if (t < 2 || t > N) throw DomainError("k_partial_sum: truncations must lie in [2, N]");
    res.truncations = truncations;
    res.terms = k_terms(q, bc, N, opts);

    const std::size_t m = grid.size();
    std::vector<double> k(m, 0.0), k1(m, 0.0), k2(m, 0.0);
    std::size_t level = 0;
    for (const auto& t : res.terms) {
        for (std::size_t j = 0; j < m; ++j) {
            const double c = std::cos(t.nu * grid[j]);
            k[j] += t.k_coeff * c;
            k1[j] += t.k1_coeff * c;
            k2[j] += t.k2_coeff * c;
        }
        while (level < truncations.size() && truncations[level] == t.n) {
            res.k.push_back(k);
            res.k1.push_back(k1);
            res.k2.push_back(k2);
            ++level;
        }
    }
    if (res.case_tag == KCase::DirichletDirichlet) res.closed_form = k2_closed_form_dd(q, bc, grid, opts.tol);
    return res;
}

std::vector<double> k1_partial_sum(const Potential& q, const BoundaryParams& bc, int N, const std::vector<double>& grid,
                                   const KSeriesOptions& opts)
{
    return k_partial_sum(q, bc, N, grid, {N}, opts).k1.back();
}

std::vector<double> k2_partial_sum(const Potential& q, const BoundaryParams& bc, int N, const std::vector<double>& grid,
                                   const KSeriesOptions& opts)
{
    return k_partial_sum(q, bc, N, grid, {N}, opts).k2.back();
}

std::vector<double> k2_closed_form_dd(const Potential& q, const BoundaryParams& bc, const std::vector<double>& grid,
                                      double tol)
{
    if (classify_k_case(bc) != KCase::DirichletDirichlet)
        throw CaseError("k2_closed_form_dd: requires alpha = pi, beta = 0");
    const CumulativeIntegrals sig(q);
    const auto breaks = doubled_breaks(q);
    double a[3];
    for (int m = 0; m < 3; ++m) a[m] = sigma_tilde_cos_moment(sig, breaks, m, tol) / kPi;

    std::vector<double> out(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double x = grid[j];
        if (!(x >= 0.0 && x <= 2.0 * kPi)) throw DomainError("k2_closed_form_dd: grid outside [0, 2pi]");
        const double even = 0.5 * (sig.sigma_tilde(x) + sig.sigma_tilde(2.0 * kPi - x));
        out[j] = 0.5 * kPi * (even - 0.5 * a[0] - a[1] * std::cos(x) - a[2] * std::cos(2.0 * x));
    }
    return out;
}

ACReport ac_diagnostic(const std::vector<double>& grid, const std::vector<std::vector<double>>& levels, double a,
                       double b)
{
    if (!(a > 0.0 && a < b && b < 2.0 * kPi)) throw DomainError("ac_diagnostic: need 0 < a < b < 2pi");
    if (levels.empty()) throw DomainError("ac_diagnostic: no partial sums supplied");
    ACReport rep;
    rep.a = a;
    rep.b = b;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        double jump = 0.0;
        rep.variations.push_back(total_variation(grid, levels[i], a, b, &jump));
        if (i + 1 == levels.size()) rep.max_jump = jump;
    }
    rep.total_variation = rep.variations.back();
    if (levels.size() >= 2) {
        const double prev = rep.variations[levels.size() - 2];
        rep.variation_change = prev > 0.0 ? std::abs(rep.total_variation - prev) / prev : 0.0;
    }
    return rep;
}

double sup_distance(const std::vector<double>& grid, const std::vector<double>& u, const std::vector<double>& v,
                    double a, double b)
{
    double s = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j)
        if (grid[j] >= a && grid[j] <= b) s = std::max(s, std::abs(u[j] - v[j]));
    return s;
}

std::vector<double> uniform_grid(double a, double b, int points)
{
    if (points < 2) throw DomainError("uniform_grid: need at least two points");
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = i + 1 == points ? b : a + (b - a) * i / (points - 1);
    return g;
}

} // namespace slspec
