#include "slspec/error.hpp"
#include "slspec/odesolve.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace slspec;

namespace {

template <class F>
double sup_error(const SolutionTrace& t, F exact)
{
    double e = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double x = kPi * i / 100.0;
        e = std::max(e, std::abs(t.at(x).y - exact(x)));
    }
    return e;
}

} // namespace

TEST_CASE("solve_ivp: constant-coefficient solutions")
{
    const auto c2 = solve_ivp(Potential::zero(), 4.0, true, 1.0, 0.0);
    CHECK(sup_error(c2, [](double x) { return std::cos(2 * x); }) < 1e-10);
    CHECK(c2.back().y == doctest::Approx(1.0).epsilon(1e-10));

    const auto lin = solve_ivp(Potential::zero(), 0.0, true, 0.0, 1.0);
    CHECK(lin.back().y == doctest::Approx(kPi).epsilon(1e-12));

    const auto shifted = solve_ivp(Potential::constant(1.0), 5.0, true, 1.0, 0.0);
    CHECK(sup_error(shifted, [](double x) { return std::cos(2 * x); }) < 1e-10);

    // Negative μ − q: cosh
    const auto ch = solve_ivp(Potential::zero(), -1.0, true, 1.0, 0.0);
    CHECK(ch.back().y == doctest::Approx(std::cosh(kPi)).epsilon(1e-10));
}

TEST_CASE("solve_ivp: both steppers agree on a step potential")
{
    const auto q = Potential::step(2.0, kPi / 2);
    SolverOptions rk;
    rk.stepper = Stepper::RK4;
    const auto m = shoot(q, 30.0, true, 0.0, 1.0);
    const auto r = shoot(q, 30.0, true, 0.0, 1.0, rk);
    CHECK(std::abs(m.y - r.y) < 1e-8);
    CHECK(m.zero_count == r.zero_count);
}

TEST_CASE("solve_ivp: blow-up and bad inputs")
{
    SolverOptions o;
    o.blowup = 1e3;
    CHECK_THROWS_AS(solve_ivp(Potential::zero(), -25.0, true, 1.0, 0.0, o), BlowupError);
    SolverOptions tiny;
    tiny.grid_size = 8;
    CHECK_THROWS_AS(solve_ivp(Potential::zero(), 1.0, true, 1.0, 0.0, tiny), DomainError);
    CHECK_THROWS_AS(solve_ivp(Potential::zero(), std::nan(""), true, 1.0, 0.0), DomainError);
}

TEST_CASE("phi and psi initial data")
{
    const auto z = Potential::zero();
    CHECK(sup_error(phi(z, 4.0, kPi / 2), [](double x) { return std::cos(2 * x); }) < 1e-10);
    CHECK(sup_error(phi(z, 1.0, kPi), [](double x) { return std::sin(x); }) < 1e-10);
    CHECK(sup_error(phi(z, 4.0, kPi / 4),
                    [](double x) { return std::sqrt(0.5) * (std::cos(2 * x) - 0.5 * std::sin(2 * x)); }) < 1e-10);

    CHECK(sup_error(psi(z, 1.0, 0.0), [](double x) { return std::sin(kPi - x); }) < 1e-10);
    CHECK(sup_error(psi(z, 4.0, kPi / 2), [](double x) { return std::cos(2 * (kPi - x)); }) < 1e-10);
    CHECK(sup_error(psi(Potential::constant(2.5), 6.5, kPi / 2), [](double x) { return std::cos(2 * (kPi - x)); }) <
          1e-10);
}

TEST_CASE("fundamental system: Wronskians stay at one")
{
    const auto q = Potential::step(2.0, kPi / 2);
    const auto fs = fundamental_system(q, 17.3);
    for (double x : {0.0, 0.4, kPi / 2, 2.5, kPi}) {
        const auto a = fs.y1.at(x), b = fs.y2.at(x);
        CHECK(std::abs(a.y * b.yprime - a.yprime * b.y - 1.0) < 1e-7);
        const auto c = fs.y3.at(x), d = fs.y4.at(x);
        CHECK(std::abs(std::abs(c.y * d.yprime - c.yprime * d.y) - 1.0) < 1e-7);
    }
}

TEST_CASE("shift covariance: (q + c, mu + c) reproduces (q, mu)")
{
    const auto q = Potential::step(2.0, kPi / 2);
    const auto a = shoot(q, 12.0, true, 1.0, 0.0);
    const auto b = shoot(q.shifted(3.0), 15.0, true, 1.0, 0.0);
    CHECK(std::abs(a.y - b.y) < 1e-12);
    CHECK(std::abs(a.yprime - b.yprime) < 1e-11);
}

TEST_CASE("zero counting")
{
    // sin 3x has two interior zeros; the zero at π itself is not interior.
    const auto t = solve_ivp(Potential::zero(), 9.0, true, 0.0, 1.0);
    CHECK(t.interior_zero_count() == 2);
    const auto c = solve_ivp(Potential::zero(), 4.0, true, 1.0, 0.0);
    CHECK(c.interior_zero_count() == 2);
}

TEST_CASE("integration grid resolves the local wavelength")
{
    const auto q = Potential::step(2.0, 1.0);
    const auto coarse = integration_grid(q, 1.0, 256);
    const auto fine = integration_grid(q, 1e6, 256);
    CHECK(coarse.front() == 0.0);
    CHECK(coarse.back() == kPi);
    CHECK(std::find(coarse.begin(), coarse.end(), 1.0) != coarse.end());
    CHECK(fine.size() > 16 * 1000 / 2);
}

TEST_CASE("picard_y2: q = 0 leaves only the leading term")
{
    const auto r = picard_y2(Potential::zero(), 3.0, 1, 512);
    for (std::size_t i = 0; i < r.trace.grid().size(); i += 37) {
        const double x = r.trace.grid()[i];
        CHECK(std::abs(r.trace.y()[i] - std::sin(3 * x) / 3) < 1e-15);
    }
    CHECK_THROWS_AS(picard_y2(Potential::zero(), 0.5, 3), DomainError);
    CHECK_THROWS_AS(picard_y2(Potential::zero(), 3.0, 0), DomainError);
}

TEST_CASE("picard_y2 agrees with the IVP within its certificate")
{
    for (const auto& q : {Potential::constant(1.0), Potential::step(2.0, kPi / 2)}) {
        const auto r = picard_y2(q, 5.0, 8);
        const auto t = solve_ivp(q, 25.0, true, 0.0, 1.0);
        CHECK(std::abs(r.trace.back().y - t.back().y) <= r.certificate.back() + 1e-8);
        CHECK(r.certificate.front() == 0.0);
    }
}

TEST_CASE("picard tail bound")
{
    // Σ_{k>8} π^k / (5^{k+1} k!), summed independently here.
    double tail = 0.0;
    for (int k = 9; k < 40; ++k) tail += std::exp(k * std::log(kPi) - (k + 1) * std::log(5.0) - std::lgamma(k + 1.0));
    CHECK(picard_tail_bound(kPi, 5.0, 8) == doctest::Approx(tail).epsilon(1e-12));
    CHECK(picard_tail_bound(kPi, 5.0, 8) == doctest::Approx(8.972114e-09).epsilon(1e-6));
    CHECK(picard_tail_bound(0.0, 5.0, 8) == 0.0);
}

TEST_CASE("kernels A and B")
{
    const auto z = Potential::zero();
    CHECK(kernel_A(z, 4.0, 1.0) == 0.0);
    CHECK(kernel_B(z, 4.0, 1.0) == 0.0);
    const auto one = Potential::constant(1.0);
    for (int n : {1, 2, 3, 6}) CHECK(std::abs(kernel_A(one, n, kPi)) < 1e-10);
    // q ≡ 1: A(x) = x sin λx + (cos λx − cos λx)/(2λ)... computed directly:
    //   ∫₀ˣ sin λ(x−2t) dt = 0,  ∫₀ˣ cos λ(x−2t) dt = sin λx / λ.
    const double lam = 3.7, x = 1.1;
    CHECK(kernel_A(one, lam, x) == doctest::Approx(x * std::sin(lam * x)).epsilon(1e-10));
    CHECK(kernel_B(one, lam, x) == doctest::Approx(x * std::cos(lam * x) - std::sin(lam * x) / lam).epsilon(1e-10));
}
