#pragma once

#include <functional>
#include <span>
#include <vector>

namespace slspec {

inline constexpr double kDefaultTol = 1e-10;

struct QuadOptions {
    double tol = kDefaultTol;
    /// Largest angular frequency present in the integrand; panels are cut so
    /// that every period is covered by at least `panels_per_period` panels.
    double omega = 0.0;
    int panels_per_period = 8;
    /// Points where the integrand (or a low derivative) jumps. Out-of-range
    /// entries are ignored.
    std::span<const double> breaks = {};
    int max_depth = 50;
};

/// Adaptive composite Simpson on [u, v] with an absolute error target.
/// Throws QuadratureError if some panel fails to converge within max_depth
/// bisections; the exception carries the last estimate and error bound.
double integrate(const std::function<double(double)>& f, double u, double v,
                 const QuadOptions& opts = {});

/// Five-point Gauss–Legendre rule on [a, b]. Exact for polynomials of degree ≤ 9.
template <class F>
double gauss_legendre5(F&& f, double a, double b)
{
    static constexpr double nodes[5] = {
        0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640, 0.9061798459386640};
    static constexpr double weights[5] = {
        0.5688888888888889, 0.4786286704993665, 0.4786286704993665, 0.2369268850561891,
        0.2369268850561891};
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 5; ++i) sum += weights[i] * f(mid + half * nodes[i]);
    return half * sum;
}

/// Merge a uniform partition of [u, v] into `cells` pieces with extra break
/// points; the result is strictly increasing, starts at u and ends at v.
std::vector<double> merged_partition(double u, double v, int cells, std::span<const double> breaks);

} // namespace slspec
