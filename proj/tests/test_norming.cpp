#include "slspec/error.hpp"
#include "slspec/norming.hpp"

#include <doctest.h>

#include <cmath>

using namespace slspec;

TEST_CASE("norming constants for q = 0")
{
    const auto z = Potential::zero();
    const BoundaryParams dd(kPi, 0.0), nn(kPi / 2, kPi / 2);
    const auto p3 = find_eigenvalue(z, dd, 3);
    CHECK(norming_a(z, dd, p3) == doctest::Approx(kPi / 32).epsilon(1e-10));
    CHECK(norming_b(z, dd, p3) == doctest::Approx(kPi / 32).epsilon(1e-10));
    CHECK(norming_a(z, nn, find_eigenvalue(z, nn, 0)) == doctest::Approx(kPi).epsilon(1e-10));
    const auto p5 = find_eigenvalue(z, nn, 5);
    CHECK(norming_a(z, nn, p5) == doctest::Approx(kPi / 2).epsilon(1e-10));
    CHECK(norming_b(z, nn, p5) == doctest::Approx(kPi / 2).epsilon(1e-10));
}

TEST_CASE("a_n and b_n differ by the square of phi/psi")
{
    // φₙ = κψₙ with κ = φₙ(π)/sin β, so aₙ = κ² bₙ.
    const auto q = Potential::step(2.0, kPi / 2);
    const BoundaryParams bc(kPi / 3, kPi / 4);
    for (int n : {2, 7}) {
        const auto p = find_eigenvalue(q, bc, n);
        const double kappa = eigenfunction(p, q, bc).back().y / std::sin(kPi / 4);
        CHECK(norming_a(q, bc, p) == doctest::Approx(kappa * kappa * norming_b(q, bc, p)).epsilon(1e-8));
    }
}

TEST_CASE("ae_n analytic values")
{
    const BoundaryParams dd(kPi, 0.0), nn(kPi / 2, kPi / 2);
    CHECK(ae_n(Potential::zero(), solve_delta(6, nn)) == 0.0);
    const double c = 2.5;
    const auto q = Potential::constant(c);
    for (int n : {2, 5, 17}) {
        CHECK(ae_n(q, solve_delta(n, nn)) == doctest::Approx(-c * kPi / (4 * n)).epsilon(1e-10));
        CHECK(ae_n(q, solve_delta(n, dd)) == doctest::Approx(-c * kPi / (4 * (n + 1))).epsilon(1e-10));
    }
}

TEST_CASE("ae_n for a step at a non-integer frequency")
{
    // −(c/2)∫₀^{x₀}(π − t) sin ωt dt, ω = 2(n + δₙ), in closed form.
    const double c = 2.0, x0 = kPi / 2;
    const auto q = Potential::step(c, x0);
    const BoundaryParams bc(kPi / 4, kPi / 2);
    for (int n : {3, 12}) {
        const DeltaValue d = solve_delta(n, bc);
        const double w = 2.0 * (n + d.value);
        const double integral = -(kPi - x0) * std::cos(w * x0) / w + kPi / w - std::sin(w * x0) / (w * w);
        CHECK(ae_n(q, d) == doctest::Approx(-0.5 * c * integral).epsilon(1e-10));
    }
}

TEST_CASE("ae_tilde_n approaches ae_n")
{
    const auto q = Potential::constant(1.0);
    const BoundaryParams nn(kPi / 2, kPi / 2);
    auto gap = [&](int n) {
        return std::abs(ae_tilde_n(q, std::sqrt(n * n + 1.0)) - ae_n(q, solve_delta(n, nn)));
    };
    CHECK(gap(40) < gap(10));
    CHECK(gap(40) < 1e-3);
    CHECK(ae_tilde_n(Potential::zero(), 3.0) == 0.0);
    CHECK_THROWS_AS(ae_tilde_n(q, 0.0), DomainError);
}

TEST_CASE("model_a substitutions")
{
    CHECK(model_a(BoundaryParams(kPi / 2, 1.0), solve_delta(7, BoundaryParams(kPi / 2, 1.0)), 0.0) ==
          doctest::Approx(kPi / 2).epsilon(1e-15));
    const BoundaryParams dd(kPi, 0.0);
    CHECK(model_a(dd, solve_delta(4, dd), 0.0) == doctest::Approx(kPi / 50).epsilon(1e-15));

    DeltaValue d;
    d.n = 4;
    d.value = 0.0;
    const double expect = kPi / 2 * (1 - 1.0 / 32) * 0.5 + kPi / 32 * (1 - 1.0 / 32) * 0.5;
    CHECK(model_a(BoundaryParams(kPi / 4, kPi / 4), d, -kPi / 16) == doctest::Approx(expect).epsilon(1e-14));
    d.n = 1;
    CHECK_THROWS_AS(model_a(dd, d, 0.0), DomainError);
}

TEST_CASE("remainders vanish for q = 0")
{
    const auto z = Potential::zero();
    const BoundaryParams nn(kPi / 2, kPi / 2), dd(kPi, 0.0);
    const auto rn = norming_record(z, nn, find_eigenvalue(z, nn, 6));
    REQUIRE(rn.rem_a.sin_part);
    CHECK(std::abs(*rn.rem_a.sin_part) < 1e-9);
    CHECK(!rn.rem_a.cos_part);
    CHECK(!rn.rem_a.combined);

    const auto rd = norming_record(z, dd, find_eigenvalue(z, dd, 6));
    REQUIRE(rd.rem_a.cos_part);
    CHECK(std::abs(*rd.rem_a.cos_part) < 1e-8);
    CHECK(!rd.rem_a.sin_part);

    const BoundaryParams mixed(kPi / 3, kPi / 4);
    const auto rm = norming_record(z, mixed, find_eigenvalue(z, mixed, 6));
    CHECK(rm.rem_a.combined);
    CHECK(rm.rem_b.combined);
}

TEST_CASE("step potential: n^2 times the model defect stays bounded")
{
    const auto q = Potential::step(2.0, kPi / 2);
    const BoundaryParams nn(kPi / 2, kPi / 2);
    double early = 0.0, late = 0.0;
    for (int n : {10, 11, 12, 13}) early = std::max(early, n * n * std::abs(norming_record(q, nn, find_eigenvalue(q, nn, n)).rem_a.defect));
    for (int n : {40, 41, 42, 43}) late = std::max(late, n * n * std::abs(norming_record(q, nn, find_eigenvalue(q, nn, n)).rem_a.defect));
    CHECK(late <= 2.0 * early);
}

TEST_CASE("norming_record needs n >= 2")
{
    const auto z = Potential::zero();
    const BoundaryParams nn(kPi / 2, kPi / 2);
    CHECK_THROWS_AS(norming_record(z, nn, find_eigenvalue(z, nn, 1)), DomainError);
}
