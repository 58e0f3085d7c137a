#pragma once

#include <span>

namespace slspec {

/// Least-squares line through (log n, log |defect|).
struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
    int points = 0;  ///< Indices that survived the noise floor.
};

/// Indices with |defect| < floor are skipped as noise. With fewer than two
/// surviving points the fit reports points < 2 and slope 0.
LogLogFit loglog_fit(std::span<const int> ns, std::span<const double> defects, double floor = 0.0);

} // namespace slspec
