#include "slspec/delta.hpp"
#include "slspec/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace slspec;

TEST_CASE("solve_delta: exact cases")
{
    CHECK(solve_delta(5, BoundaryParams(kPi, 0.0)).value == 1.0);
    CHECK(solve_delta(5, BoundaryParams(kPi / 2, kPi / 2)).value == 0.0);
    CHECK(solve_delta(5, BoundaryParams(kPi, kPi / 2)).value == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("solve_delta matches bisection on the scalar equation")
{
    const BoundaryParams bc(kPi / 4, kPi / 2);
    const int n = 10;
    double lo = -0.5, hi = 0.5;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (delta_map(n, mid, bc) - mid > 0.0 ? lo : hi) = mid;
    }
    const DeltaValue d = solve_delta(n, bc);
    CHECK(std::abs(d.value - 0.5 * (lo + hi)) < 1e-13);
    CHECK(d.residual <= 1e-12);
    CHECK(!d.extrapolated);
    CHECK(std::abs(d.value + 1.0 / (10 * kPi)) < 1.0 / (n * n));
}

TEST_CASE("delta_asymptotic closed forms")
{
    CHECK(delta_asymptotic(10, BoundaryParams(kPi / 4, 3 * kPi / 4)) == doctest::Approx(-1.0 / (5 * kPi)).epsilon(1e-14));
    CHECK(delta_asymptotic(7, BoundaryParams(kPi, 0.0)) == 1.0);
    CHECK(delta_asymptotic(10, BoundaryParams(kPi, kPi / 4)) == doctest::Approx(0.5 + 1.0 / (kPi * 10.5)).epsilon(1e-14));
    CHECK(delta_asymptotic(10, BoundaryParams(kPi / 4, 0.0)) == doctest::Approx(0.5 - 1.0 / (kPi * 10.5)).epsilon(1e-14));
}

TEST_CASE("delta defect decays faster than 1/n")
{
    for (const auto& bc : {BoundaryParams(kPi / 4, kPi / 2), BoundaryParams(kPi, kPi / 3), BoundaryParams(kPi / 3, 0.0)}) {
        const double d10 = std::abs(solve_delta(10, bc).value - delta_asymptotic(10, bc));
        const double d100 = std::abs(solve_delta(100, bc).value - delta_asymptotic(100, bc));
        CHECK(d100 < d10 / 50.0);
    }
}

TEST_CASE("small indices are flagged, not certified")
{
    CHECK_THROWS_AS(solve_delta(1, BoundaryParams(kPi / 4, kPi / 2)), DomainError);
    const DeltaValue d = delta_for_index(0, BoundaryParams(kPi, 0.0));
    CHECK(d.extrapolated);
    CHECK(d.value == 1.0);
    CHECK(!delta_for_index(2, BoundaryParams(kPi, 0.0)).extrapolated);
}

TEST_CASE("iteration cap raises with the last iterate")
{
    DeltaOptions o;
    o.max_iterations = 1;
    o.tol = 1e-300;
    try {
        solve_delta(2, BoundaryParams(0.3, 2.9), o);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(std::isfinite(e.last_iterate()));
        CHECK(e.residual() > 0.0);
    }
}
