#include "slspec/fit.hpp"

#include "slspec/error.hpp"

#include <cmath>

namespace slspec {

LogLogFit loglog_fit(std::span<const int> ns, std::span<const double> defects, double floor)
{
    if (ns.size() != defects.size()) throw DomainError("loglog_fit: size mismatch");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int m = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double d = std::abs(defects[i]);
        if (ns[i] <= 0 || !(d >= floor) || d == 0.0) continue;
        const double x = std::log(static_cast<double>(ns[i]));
        const double y = std::log(d);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    LogLogFit fit;
    fit.points = m;
    if (m < 2) return fit;
    const double denom = m * sxx - sx * sx;
    fit.slope = (m * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / m;
    return fit;
}

} // namespace slspec
