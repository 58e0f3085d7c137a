#include "slspec/error.hpp"
#include "slspec/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace slspec;
using std::numbers::pi;

TEST_CASE("integrate: closed-form integrals")
{
    CHECK(integrate([](double x) { return std::pow(std::sin(3 * x), 2); }, 0, pi) == doctest::Approx(pi / 2).epsilon(1e-12));
    CHECK(integrate([](double) { return 1.0; }, 0, pi) == doctest::Approx(pi).epsilon(1e-14));
    QuadOptions o;
    o.omega = 8;
    CHECK(std::abs(integrate([](double t) { return (pi - t) * std::sin(8 * t); }, 0, pi, o) - pi / 8) < 1e-10);
}

TEST_CASE("integrate: additivity over subintervals")
{
    auto f = [](double x) { return std::exp(-x) * std::cos(5 * x); };
    const double whole = integrate(f, 0, 3);
    CHECK(std::abs(whole - (integrate(f, 0, 1.3) + integrate(f, 1.3, 3))) < 1e-10);
    CHECK_THROWS_AS(integrate(f, 3, 0), DomainError);
    CHECK(integrate(f, 1, 1) == 0.0);
}

TEST_CASE("integrate: break points resolve a jump")
{
    const double jump = 1.0;
    auto f = [&](double x) { return x < jump ? 2.0 : 0.0; };
    const double breaks[] = {jump};
    QuadOptions o;
    o.breaks = breaks;
    CHECK(std::abs(integrate(f, 0, pi, o) - 2.0) < 1e-13);
    // the break also bounds an oscillatory panel set
    o.omega = 20;
    CHECK(std::abs(integrate([&](double x) { return f(x) * std::sin(20 * x); }, 0, pi, o) -
                   2.0 * (1 - std::cos(20.0)) / 20) < 1e-11);
}

TEST_CASE("integrate: exhausted depth raises with estimate and bound")
{
    QuadOptions o;
    o.tol = 1e-14;
    o.max_depth = 2;
    try {
        integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0, 1, o);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::isfinite(e.estimate()));
        CHECK(e.error_bound() > 0.0);
    }
}

TEST_CASE("gauss_legendre5 is exact through degree 9")
{
    auto p9 = [](double x) { return std::pow(x, 9) - 3 * std::pow(x, 4) + 1; };
    const double exact = (std::pow(2.0, 10) - 1) / 10 - 3 * (std::pow(2.0, 5) - 1) / 5 + 1;
    CHECK(gauss_legendre5(p9, 1.0, 2.0) == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("merged_partition keeps ends and break points")
{
    const double breaks[] = {0.35, 5.0, -1.0};
    const auto p = merged_partition(0.0, 1.0, 4, breaks);
    REQUIRE(p.size() == 6);
    CHECK(p.front() == 0.0);
    CHECK(p.back() == 1.0);
    CHECK(p[2] == 0.35);
    for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i] > p[i - 1]);
}
