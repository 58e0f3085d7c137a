#include "slspec/delta.hpp"

#include "slspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace slspec {

namespace {

double angle_term(double nu, SinCos sc)
{
    const double denom = std::sqrt(nu * nu * sc.sin * sc.sin + sc.cos * sc.cos);
    const double arg = std::clamp(sc.cos / denom, -1.0, 1.0);
    return std::acos(arg) / kPi;
}

double cot(SinCos sc) { return sc.cos / sc.sin; }

DeltaValue iterate(int n, const BoundaryParams& bc, const DeltaOptions& opts, double guess)
{
    double d = guess;
    for (int it = 1; it <= opts.max_iterations; ++it) {
        const double next = delta_map(n, d, bc);
        const double step = std::abs(next - d);
        d = next;
        if (step <= opts.tol) {
            DeltaValue out;
            out.n = n;
            out.value = d;
            out.iterations = it;
            out.residual = std::abs(delta_map(n, d, bc) - d);
            return out;
        }
    }
    const double residual = std::abs(delta_map(n, d, bc) - d);
    std::ostringstream msg;
    msg << "solve_delta: no convergence for n = " << n << " (residual " << residual << ")";
    throw ConvergenceError(msg.str(), d, residual);
}

} // namespace

double delta_map(int n, double delta, const BoundaryParams& bc)
{
    const double nu = n + delta;
    return angle_term(nu, bc.alpha_sc()) - angle_term(nu, bc.beta_sc());
}

double delta_asymptotic(int n, const BoundaryParams& bc)
{
    if (n < 1) throw DomainError("delta_asymptotic: requires n >= 1");
    const bool a_pi = bc.alpha_is_pi();
    const bool b_zero = bc.beta_is_zero();
    if (a_pi && b_zero) return 1.0;
    if (a_pi) return 0.5 + cot(bc.beta_sc()) / (kPi * (n + 0.5));
    if (b_zero) return 0.5 - cot(bc.alpha_sc()) / (kPi * (n + 0.5));
    return (cot(bc.beta_sc()) - cot(bc.alpha_sc())) / (kPi * n);
}

DeltaValue solve_delta(int n, const BoundaryParams& bc, const DeltaOptions& opts)
{
    if (n < 2) throw DomainError("solve_delta: the fixed-point equation is stated for n >= 2");
    if (!(opts.tol > 0.0)) throw DomainError("solve_delta: tol must be positive");
    // The interior guess can be far off for small n and steep angles; keep n+δ positive.
    const double guess = std::clamp(delta_asymptotic(n, bc), -0.5, 1.5);
    return iterate(n, bc, opts, guess);
}

DeltaValue delta_for_index(int n, const BoundaryParams& bc, const DeltaOptions& opts)
{
    if (n >= 2) return solve_delta(n, bc, opts);
    if (n < 0) throw DomainError("delta_for_index: n must be non-negative");
    const double guess = std::clamp(delta_asymptotic(std::max(n, 1), bc), 0.0, 1.0);
    DeltaValue out;
    try {
        out = iterate(n, bc, opts, guess);
    } catch (const ConvergenceError& e) {
        out.n = n;
        out.value = e.last_iterate();
        out.residual = e.residual();
        out.iterations = opts.max_iterations;
    }
    out.extrapolated = true;
    return out;
}

} // namespace slspec
