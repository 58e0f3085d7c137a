#include "slspec/error.hpp"
#include "slspec/spectrum.hpp"

#include <doctest.h>

#include <cmath>

using namespace slspec;

TEST_CASE("char_function closed forms for q = 0")
{
    const auto z = Potential::zero();
    const BoundaryParams dd(kPi, 0.0), nn(kPi / 2, kPi / 2);
    for (int n : {0, 1, 2}) CHECK(std::abs(char_function(z, dd, (n + 1.0) * (n + 1.0))) < 1e-10);
    for (int n : {1, 2, 3}) CHECK(std::abs(char_function(z, nn, double(n * n))) < 1e-9);
    CHECK(char_function(z, nn, 2.25) == doctest::Approx(1.5).epsilon(1e-10));
    // sin(√μ π)/√μ at a generic point
    CHECK(char_function(z, dd, 2.0) == doctest::Approx(std::sin(std::sqrt(2.0) * kPi) / std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("char_function from either end agrees")
{
    const auto q = Potential::step(2.0, kPi / 2);
    const BoundaryParams bc(kPi / 3, kPi / 4);
    for (double mu : {-0.7, 3.3, 40.1}) CHECK(std::abs(char_function(q, bc, mu) - char_function_from_right(q, bc, mu)) < 1e-9);
}

TEST_CASE("brackets contain the root")
{
    auto contains = [](std::pair<double, double> b, double mu) { return b.first <= mu && mu <= b.second; };
    CHECK(contains(bracket_eigenvalue(Potential::zero(), BoundaryParams(kPi, 0.0), 3), 16.0));
    CHECK(contains(bracket_eigenvalue(Potential::constant(1.0), BoundaryParams(kPi / 2, kPi / 2), 2), 5.0));
    const auto q = Potential::step(2.0, kPi / 2);
    const BoundaryParams nn(kPi / 2, kPi / 2);
    const auto b = bracket_eigenvalue(q, nn, 5);
    CHECK(contains(b, find_eigenvalue(q, nn, 5).mu));
    CHECK(std::abs(0.5 * (b.first + b.second) - 26.01) < 1.0);
}

TEST_CASE("find_eigenvalue closed forms")
{
    CHECK(std::abs(find_eigenvalue(Potential::zero(), BoundaryParams(kPi, 0.0), 4).mu - 25.0) < 1e-8);
    CHECK(std::abs(find_eigenvalue(Potential::zero(), BoundaryParams(kPi / 2, 0.0), 2).mu - 6.25) < 1e-8);
    CHECK(std::abs(find_eigenvalue(Potential::constant(1.0), BoundaryParams(kPi, 0.0), 4).mu - 26.0) < 1e-8);
    const auto low = find_eigenvalue(Potential::constant(-3.0), BoundaryParams(kPi / 2, kPi / 2), 0);
    CHECK(low.negative_mu);
    CHECK(low.mu == doctest::Approx(-3.0).epsilon(1e-9));
    CHECK(low.lambda == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("oscillation certificate on a step potential")
{
    const auto q = Potential::step(2.0, kPi / 2);
    for (const auto& bc : {BoundaryParams(kPi / 4, kPi / 2), BoundaryParams(kPi, kPi / 3), BoundaryParams(kPi / 3, 0.0),
                           BoundaryParams(kPi, 0.0)}) {
        const Spectrum s = compute_spectrum(q, bc, 0, 10);
        REQUIRE(s.pairs.size() == 11);
        for (std::size_t i = 0; i < s.pairs.size(); ++i) {
            const auto& p = s.pairs[i];
            CHECK(p.n == int(i));
            CHECK(p.zero_count == p.n);
            CHECK(eigenfunction(p, q, bc).interior_zero_count() == p.n);
            CHECK(eigenfunction_psi(p, q, bc).interior_zero_count() == p.n);
            if (i) CHECK(p.mu > s.pairs[i - 1].mu);
        }
    }
}

TEST_CASE("eigenfunctions are the closed forms for q = 0")
{
    const auto z = Potential::zero();
    const BoundaryParams dd(kPi, 0.0), nn(kPi / 2, kPi / 2);
    const auto f1 = eigenfunction(find_eigenvalue(z, dd, 1), z, dd);
    const auto f3 = eigenfunction(find_eigenvalue(z, nn, 3), z, nn);
    for (double x : {0.3, 1.0, 2.2, 3.0}) {
        CHECK(std::abs(f1.at(x).y - std::sin(2 * x) / 2) < 1e-9);
        CHECK(std::abs(f3.at(x).y - std::cos(3 * x)) < 1e-8);
    }
}

TEST_CASE("eigenvalue remainder r_n is small for a step")
{
    // μₙ − (n+δₙ)² − [q] → 0
    const auto q = Potential::step(2.0, kPi / 2);
    const BoundaryParams bc(kPi / 4, kPi / 2);
    auto r = [&](int n) {
        const auto p = find_eigenvalue(q, bc, n);
        const double nu = n + p.delta.value;
        return std::abs(p.mu - nu * nu - mean_q(q));
    };
    CHECK(r(60) < r(10));
    CHECK(r(60) < 0.05);
}

TEST_CASE("compute_spectrum argument checks")
{
    CHECK_THROWS_AS(compute_spectrum(Potential::zero(), BoundaryParams(kPi, 0.0), 3, 2), DomainError);
    CHECK_THROWS_AS(compute_spectrum(Potential::zero(), BoundaryParams(kPi, 0.0), -1, 2), DomainError);
    // μ₂ ≤ 0 is outside the regime the asymptotic bracket serves
    CHECK_THROWS_AS(find_eigenvalue(Potential::constant(-50.0), BoundaryParams(kPi, 0.0), 2), UnsupportedRegime);
}
