#include "slspec/norming.hpp"

#include "slspec/error.hpp"

#include <cmath>

namespace slspec {

namespace {

double squared_norm(const SolutionTrace& trace, const Potential& q, double lambda, double tol)
{
    QuadOptions opts;
    opts.tol = tol;
    opts.omega = 2.0 * lambda;
    opts.breaks = q.breakpoints();
    return integrate(
        [&](double x) {
            const double y = trace.at(x).y;
            return y * y;
        },
        0.0, kPi, opts);
}

double sine_moment(const Potential& q, double frequency, double tol)
{
    QuadOptions opts;
    opts.tol = tol;
    opts.omega = frequency;
    opts.breaks = q.breakpoints();
    return -0.5 * integrate([&](double t) { return (kPi - t) * q(t) * std::sin(frequency * t); }, 0.0, kPi, opts);
}

double model(SinCos sc, const DeltaValue& delta, double ae)
{
    const double nu = delta.n + delta.value;
    const double corr = 1.0 + 2.0 * ae / (kPi * nu);
    return kPi / 2.0 * corr * sc.sin * sc.sin + kPi / (2.0 * nu * nu) * corr * sc.cos * sc.cos;
}

Remainders extract(double measured, double model_value, SinCos sc, const DeltaValue& delta)
{
    const double nu = delta.n + delta.value;
    Remainders r;
    r.defect = measured - model_value;
    if (sc.sin != 0.0) r.sin_part = r.defect / (kPi / 2.0 * sc.sin * sc.sin);
    if (sc.sin == 0.0) r.cos_part = r.defect / (kPi / (2.0 * nu * nu));
    r.combined = sc.sin != 0.0 && sc.cos != 0.0;
    return r;
}

void require_index(int n, const char* who)
{
    if (n < 2) throw DomainError(std::string(who) + ": requires n >= 2");
}

} // namespace

double norming_a(const Potential& q, const BoundaryParams& bc, const Eigenpair& pair, const NormingOptions& opts)
{
    return squared_norm(eigenfunction(pair, q, bc, opts.solver), q, pair.lambda, opts.tol);
}

double norming_b(const Potential& q, const BoundaryParams& bc, const Eigenpair& pair, const NormingOptions& opts)
{
    return squared_norm(eigenfunction_psi(pair, q, bc, opts.solver), q, pair.lambda, opts.tol);
}

double ae_n(const Potential& q, const DeltaValue& delta, double tol)
{
    require_index(delta.n, "ae_n");
    return sine_moment(q, 2.0 * (delta.n + delta.value), tol);
}

double ae_tilde_n(const Potential& q, double lambda_n, double tol)
{
    if (!(lambda_n > 0.0)) throw DomainError("ae_tilde_n: requires lambda_n > 0");
    return sine_moment(q, 2.0 * lambda_n, tol);
}

double model_a(const BoundaryParams& bc, const DeltaValue& delta, double ae)
{
    require_index(delta.n, "model_a");
    return model(bc.alpha_sc(), delta, ae);
}

double model_b(const BoundaryParams& bc, const DeltaValue& delta, double ae)
{
    require_index(delta.n, "model_b");
    return model(bc.beta_sc(), delta, ae);
}

Remainders extract_remainders_a(double a_n, double model_value, const BoundaryParams& bc, const DeltaValue& delta)
{
    require_index(delta.n, "extract_remainders");
    return extract(a_n, model_value, bc.alpha_sc(), delta);
}

Remainders extract_remainders_b(double b_n, double model_value, const BoundaryParams& bc, const DeltaValue& delta)
{
    require_index(delta.n, "extract_remainders");
    return extract(b_n, model_value, bc.beta_sc(), delta);
}

NormingRecord norming_record(const Potential& q, const BoundaryParams& bc, const Eigenpair& pair,
                             const NormingOptions& opts)
{
    require_index(pair.n, "norming_record");
    NormingRecord rec;
    rec.n = pair.n;
    rec.a_n = norming_a(q, bc, pair, opts);
    rec.b_n = norming_b(q, bc, pair, opts);
    rec.ae_n = ae_n(q, pair.delta, opts.tol);
    rec.model_a = model_a(bc, pair.delta, rec.ae_n);
    rec.model_b = model_b(bc, pair.delta, rec.ae_n);
    rec.rem_a = extract_remainders_a(rec.a_n, rec.model_a, bc, pair.delta);
    rec.rem_b = extract_remainders_b(rec.b_n, rec.model_b, bc, pair.delta);
    return rec;
}

} // namespace slspec
