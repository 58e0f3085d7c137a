#include "slspec/quadrature.hpp"

#include "slspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace slspec {

namespace {

struct Accumulator {
    double sum = 0.0;
    double err = 0.0;
    bool failed = false;
};

// Classic recursive Simpson with Richardson correction. `whole` is the
// Simpson value on [a, b] built from fa, fm, fb.
void simpson_refine(const std::function<double(double)>& f, double a, double b, double fa,
                    double fm, double fb, double whole, double tol, int depth, Accumulator& acc)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double diff = left + right - whole;

    if (std::abs(diff) <= 15.0 * tol || (b - a) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(m)) {
        acc.sum += left + right + diff / 15.0;
        acc.err += std::abs(diff) / 15.0;
        return;
    }
    if (depth <= 0) {
        acc.sum += left + right + diff / 15.0;
        acc.err += std::abs(diff) / 15.0;
        acc.failed = true;
        return;
    }
    simpson_refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, acc);
    simpson_refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, acc);
}

} // namespace

std::vector<double> merged_partition(double u, double v, int cells, std::span<const double> breaks)
{
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(cells) + 1 + breaks.size());
    for (int i = 0; i <= cells; ++i)
        pts.push_back(i == cells ? v : u + (v - u) * static_cast<double>(i) / cells);
    for (double b : breaks)
        if (b > u && b < v) pts.push_back(b);
    std::sort(pts.begin(), pts.end());

    // Drop points that would leave slivers; keep u and v and every break.
    const double min_gap = 1e-12 * std::max(1.0, std::abs(v - u));
    std::vector<double> out;
    out.reserve(pts.size());
    for (double p : pts) {
        if (!out.empty() && p - out.back() <= min_gap) {
            if (p == v) out.back() = v;
            continue;
        }
        out.push_back(p);
    }
    if (out.size() == 1) out.push_back(v);
    return out;
}

double integrate(const std::function<double(double)>& f, double u, double v, const QuadOptions& opts)
{
    if (!(u <= v)) throw DomainError("integrate: requires u <= v");
    if (!(opts.tol > 0.0)) throw DomainError("integrate: tol must be positive");
    if (u == v) return 0.0;

    const double length = v - u;
    int cells = 1;
    if (opts.omega > 0.0) {
        const double periods = length * opts.omega / (2.0 * std::numbers::pi);
        cells = std::max(1, static_cast<int>(std::ceil(periods * opts.panels_per_period)));
    }
    const auto panels = merged_partition(u, v, cells, opts.breaks);

    Accumulator acc;
    for (std::size_t i = 0; i + 1 < panels.size(); ++i) {
        const double a = panels[i];
        const double b = panels[i + 1];
        // One ulp inward: panel ends sit on break points, where only the
        // one-sided limit belongs to this panel.
        const double fa = f(std::nextafter(a, b));
        const double fb = f(std::nextafter(b, a));
        const double fm = f(0.5 * (a + b));
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        const double local_tol = opts.tol * (b - a) / length;
        simpson_refine(f, a, b, fa, fm, fb, whole, local_tol, opts.max_depth, acc);
    }
    if (acc.failed || !std::isfinite(acc.sum)) {
        std::ostringstream msg;
        msg << "integrate: no convergence on [" << u << ", " << v << "] (estimate " << acc.sum
            << ", error bound " << acc.err << ")";
        throw QuadratureError(msg.str(), acc.sum, acc.err);
    }
    return acc.sum;
}

} // namespace slspec
