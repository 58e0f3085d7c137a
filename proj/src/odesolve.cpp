#include "slspec/odesolve.hpp"

#include "slspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace slspec {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

void magnus_step(const Potential& q, double mu, double x0, double h, double& y, double& yp)
{
    const double g1 = q(x0 + (0.5 - kSqrt3 / 6.0) * h) - mu;
    const double g2 = q(x0 + (0.5 + kSqrt3 / 6.0) * h) - mu;
    const double gbar = 0.5 * (g1 + g2);
    const double c = kSqrt3 * h * h / 12.0 * (g1 - g2);
    const double s2 = c * c + h * h * gbar;

    // exp(Ω) = C·I + S·Ω with Ω² = s2·I.
    double C;
    double S;
    if (std::abs(s2) < 1e-8) {
        C = 1.0 + s2 / 2.0 + s2 * s2 / 24.0;
        S = 1.0 + s2 / 6.0 + s2 * s2 / 120.0;
    } else if (s2 > 0.0) {
        const double s = std::sqrt(s2);
        C = std::cosh(s);
        S = std::sinh(s) / s;
    } else {
        const double w = std::sqrt(-s2);
        C = std::cos(w);
        S = std::sin(w) / w;
    }
    const double ny = C * y + S * (c * y + h * yp);
    const double nyp = C * yp + S * (h * gbar * y - c * yp);
    y = ny;
    yp = nyp;
}

void rk4_step(const Potential& q, double mu, double x0, double h, double& y, double& yp)
{
    // Step ends may sit on break points; take the limits from inside the step.
    const double g0 = q(std::nextafter(x0, x0 + h)) - mu;
    const double gm = q(x0 + 0.5 * h) - mu;
    const double g1 = q(std::nextafter(x0 + h, x0)) - mu;

    const double k1y = yp;
    const double k1p = g0 * y;
    const double k2y = yp + 0.5 * h * k1p;
    const double k2p = gm * (y + 0.5 * h * k1y);
    const double k3y = yp + 0.5 * h * k2p;
    const double k3p = gm * (y + 0.5 * h * k2y);
    const double k4y = yp + h * k3p;
    const double k4p = g1 * (y + h * k3y);

    y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    yp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
}

void step(Stepper s, const Potential& q, double mu, double x0, double h, double& y, double& yp)
{
    if (s == Stepper::Magnus4)
        magnus_step(q, mu, x0, h, y, yp);
    else
        rk4_step(q, mu, x0, h, y, yp);
}

// Counts sign changes of a sampled function, treating the two end intervals
// specially: a boundary value that is negligible against the largest sample
// is a boundary zero, not an interior one.
class ZeroCounter {
public:
    void push(double v)
    {
        values_.push_back(v);
        max_abs_ = std::max(max_abs_, std::abs(v));
    }
    int count() const
    {
        const std::size_t m = values_.size();
        if (m < 2) return 0;
        const double negligible = 1e-8 * max_abs_;
        int zeros = 0;
        double prev = 0.0;
        std::size_t lo = 1;
        std::size_t hi = m - 1;  // exclusive of the last sample
        if (std::abs(values_.front()) > negligible) {
            prev = values_.front();
            lo = 1;
        }
        for (std::size_t i = lo; i < hi; ++i) {
            const double v = values_[i];
            if (v == 0.0) continue;
            if (prev != 0.0 && (v > 0.0) != (prev > 0.0)) ++zeros;
            prev = v;
        }
        const double last = values_.back();
        if (std::abs(last) > negligible && prev != 0.0 && (last > 0.0) != (prev > 0.0)) ++zeros;
        return zeros;
    }

private:
    std::vector<double> values_;
    double max_abs_ = 0.0;
};

[[noreturn]] void throw_blowup(double x, double mu)
{
    std::ostringstream msg;
    msg << "solve_ivp: |y| exceeded blow-up bound at x = " << x << " (mu = " << mu << ")";
    throw BlowupError(msg.str(), x);
}

} // namespace

SolutionTrace::SolutionTrace(Potential q, double mu, Stepper stepper, std::vector<double> grid,
                             std::vector<double> y, std::vector<double> yprime)
    : q_(std::move(q)), mu_(mu), stepper_(stepper), grid_(std::move(grid)), y_(std::move(y)),
      yprime_(std::move(yprime))
{
}

SolutionTrace::Value SolutionTrace::at(double x) const
{
    if (!(x >= grid_.front() && x <= grid_.back()))
        throw DomainError("SolutionTrace::at: abscissa outside the trace");
    auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - grid_.begin()) - 1;
    double y = y_[i];
    double yp = yprime_[i];
    if (x > grid_[i]) step(stepper_, q_, mu_, grid_[i], x - grid_[i], y, yp);
    return {y, yp};
}

int SolutionTrace::interior_zero_count() const
{
    ZeroCounter zc;
    for (double v : y_) zc.push(v);
    return zc.count();
}

std::vector<double> integration_grid(const Potential& q, double mu, int grid_size)
{
    if (grid_size < 64) throw DomainError("solve_ivp: grid_size must be at least 64");
    if (!std::isfinite(mu)) throw DomainError("solve_ivp: mu must be finite");
    double h = kPi / grid_size;
    if (mu > 0.0) h = std::min(h, (2.0 * kPi / std::sqrt(mu)) / 16.0);
    const int cells = static_cast<int>(std::ceil(kPi / h - 1e-9));
    return merged_partition(0.0, kPi, cells, q.breakpoints());
}

SolutionTrace solve_ivp(const Potential& q, double mu, bool at_left, double y0, double yp0,
                        const SolverOptions& opts)
{
    auto grid = integration_grid(q, mu, opts.grid_size);
    const std::size_t m = grid.size();
    std::vector<double> y(m);
    std::vector<double> yp(m);

    double cy = y0;
    double cyp = yp0;
    if (at_left) {
        y[0] = cy;
        yp[0] = cyp;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            step(opts.stepper, q, mu, grid[i], grid[i + 1] - grid[i], cy, cyp);
            if (!(std::abs(cy) <= opts.blowup)) throw_blowup(grid[i + 1], mu);
            y[i + 1] = cy;
            yp[i + 1] = cyp;
        }
    } else {
        y[m - 1] = cy;
        yp[m - 1] = cyp;
        for (std::size_t i = m - 1; i > 0; --i) {
            step(opts.stepper, q, mu, grid[i], grid[i - 1] - grid[i], cy, cyp);
            if (!(std::abs(cy) <= opts.blowup)) throw_blowup(grid[i - 1], mu);
            y[i - 1] = cy;
            yp[i - 1] = cyp;
        }
    }
    return SolutionTrace(q, mu, opts.stepper, std::move(grid), std::move(y), std::move(yp));
}

Endpoint shoot(const Potential& q, double mu, bool at_left, double y0, double yp0,
               const SolverOptions& opts)
{
    const auto grid = integration_grid(q, mu, opts.grid_size);
    const std::size_t m = grid.size();
    double cy = y0;
    double cyp = yp0;
    ZeroCounter zc;
    zc.push(cy);
    for (std::size_t k = 0; k + 1 < m; ++k) {
        const std::size_t i = at_left ? k : m - 1 - k;
        const std::size_t j = at_left ? k + 1 : m - 2 - k;
        step(opts.stepper, q, mu, grid[i], grid[j] - grid[i], cy, cyp);
        if (!(std::abs(cy) <= opts.blowup)) throw_blowup(grid[j], mu);
        zc.push(cy);
    }
    return {cy, cyp, zc.count()};
}

SolutionTrace phi(const Potential& q, double mu, double alpha, const SolverOptions& opts)
{
    if (!(alpha > 0.0 && alpha <= kPi)) throw DomainError("phi: alpha must lie in (0, pi]");
    const auto sc = exact_sincos(alpha);
    return solve_ivp(q, mu, true, sc.sin, -sc.cos, opts);
}

SolutionTrace psi(const Potential& q, double mu, double beta, const SolverOptions& opts)
{
    if (!(beta >= 0.0 && beta < kPi)) throw DomainError("psi: beta must lie in [0, pi)");
    const auto sc = exact_sincos(beta);
    return solve_ivp(q, mu, false, sc.sin, -sc.cos, opts);
}

FundamentalSystem fundamental_system(const Potential& q, double mu, const SolverOptions& opts)
{
    return {solve_ivp(q, mu, true, 1.0, 0.0, opts), solve_ivp(q, mu, true, 0.0, 1.0, opts),
            solve_ivp(q, mu, false, 1.0, 0.0, opts), solve_ivp(q, mu, false, 0.0, 1.0, opts)};
}

double picard_tail_bound(double sigma0, double lambda, int K)
{
    // term_k = s^k / (λ^{k+1} k!), built up from k = 0 to stay finite.
    double term = 1.0 / lambda;
    for (int k = 1; k <= K; ++k) term *= sigma0 / (lambda * k);
    double tail = 0.0;
    for (int k = K + 1; k < K + 400; ++k) {
        term *= sigma0 / (lambda * k);
        tail += term;
        if (term <= 1e-18 * tail) break;
    }
    return tail;
}

PicardResult picard_y2(const Potential& q, double lambda, int K, int grid_size)
{
    if (!(lambda >= 1.0)) throw DomainError("picard_y2: requires real lambda >= 1");
    if (K < 1) throw DomainError("picard_y2: requires K >= 1");
    const auto grid = integration_grid(q, lambda * lambda, grid_size);
    const std::size_t m = grid.size();

    std::vector<double> s(m), ds(m);
    for (std::size_t i = 0; i < m; ++i) {
        s[i] = std::sin(lambda * grid[i]) / lambda;
        ds[i] = std::cos(lambda * grid[i]);
    }
    std::vector<double> sum = s, dsum = ds;

    // S_k(x) = (sin λx·C(x) − cos λx·D(x))/λ with
    //   C(x) = ∫₀ˣ cos λt q(t) S_{k−1}(t) dt,  D(x) = ∫₀ˣ sin λt q(t) S_{k−1}(t) dt,
    // and S_k'(x) = cos λx·C(x) + sin λx·D(x). S_{k−1} between nodes is the cubic
    // Hermite interpolant of its nodal values and slopes.
    for (int k = 1; k <= K; ++k) {
        std::vector<double> ns(m), nds(m);
        double C = 0.0;
        double D = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (i > 0) {
                const double a = grid[i - 1];
                const double h = grid[i] - a;
                const double y0 = s[i - 1], y1 = s[i], d0 = ds[i - 1], d1 = ds[i];
                auto hermite = [&](double t) {
                    const double u = (t - a) / h;
                    const double u2 = u * u, u3 = u2 * u;
                    return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * h * d0 + (-2 * u3 + 3 * u2) * y1 +
                           (u3 - u2) * h * d1;
                };
                C += gauss_legendre5([&](double t) { return std::cos(lambda * t) * q(t) * hermite(t); }, a, grid[i]);
                D += gauss_legendre5([&](double t) { return std::sin(lambda * t) * q(t) * hermite(t); }, a, grid[i]);
            }
            const double sx = std::sin(lambda * grid[i]);
            const double cx = std::cos(lambda * grid[i]);
            ns[i] = (sx * C - cx * D) / lambda;
            nds[i] = cx * C + sx * D;
        }
        s = std::move(ns);
        ds = std::move(nds);
        for (std::size_t i = 0; i < m; ++i) {
            sum[i] += s[i];
            dsum[i] += ds[i];
        }
    }

    const CumulativeIntegrals sig(q);
    std::vector<double> cert(m);
    for (std::size_t i = 0; i < m; ++i) cert[i] = picard_tail_bound(sig.sigma0(grid[i]), lambda, K);

    return {SolutionTrace(q, lambda * lambda, Stepper::Magnus4, grid, std::move(sum), std::move(dsum)),
            std::move(cert)};
}

double kernel_A(const Potential& q, double lambda, double x, double tol)
{
    if (!(lambda >= 1.0)) throw DomainError("kernel_A: requires lambda >= 1");
    if (!(x >= 0.0 && x <= kPi)) throw DomainError("kernel_A: x outside [0, pi]");
    QuadOptions opts;
    opts.tol = tol;
    opts.breaks = q.breakpoints();
    const double Q = integrate([&](double t) { return q(t); }, 0.0, x, opts);
    opts.omega = 2.0 * lambda;
    const double osc = integrate([&](double t) { return q(t) * std::sin(lambda * (x - 2.0 * t)); }, 0.0, x, opts);
    return Q * std::sin(lambda * x) + osc;
}

double kernel_B(const Potential& q, double lambda, double x, double tol)
{
    if (!(lambda >= 1.0)) throw DomainError("kernel_B: requires lambda >= 1");
    if (!(x >= 0.0 && x <= kPi)) throw DomainError("kernel_B: x outside [0, pi]");
    QuadOptions opts;
    opts.tol = tol;
    opts.breaks = q.breakpoints();
    const double Q = integrate([&](double t) { return q(t); }, 0.0, x, opts);
    opts.omega = 2.0 * lambda;
    const double osc = integrate([&](double t) { return q(t) * std::cos(lambda * (x - 2.0 * t)); }, 0.0, x, opts);
    return Q * std::cos(lambda * x) - osc;
}

} // namespace slspec
