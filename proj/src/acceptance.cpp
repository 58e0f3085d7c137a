#include "slspec/acceptance.hpp"

#include "slspec/error.hpp"
#include "slspec/fit.hpp"
#include "slspec/io.hpp"
#include "slspec/kseries.hpp"
#include "slspec/norming.hpp"
#include "slspec/parallel.hpp"
#include "slspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>

namespace slspec {

namespace {

const std::map<std::string, double>& defaults()
{
    static const std::map<std::string, double> d = {
        {"C1.abs", 1e-8},        {"C2.rel", 1e-6},      {"C2.abs", 1e-8},      {"C3.abs", 1e-6},
        {"C4.residual", 1e-12},  {"C4.slope", -1.8},    {"C5.slope", -1.8},    {"C6.ratio", 2.0},
        {"C7.abs", 1e-8},        {"C8.ratio", 0.5},     {"C9.slack", 1e-8},    {"C9.band", 0.3},
        {"C10.fraction", 0.01},  {"C11.variation", 0.05},
    };
    return d;
}

const std::vector<std::pair<std::string, std::string>>& catalogue()
{
    static const std::vector<std::pair<std::string, std::string>> c = {
        {"C1", "exact spectrum, q = 0"},
        {"C2", "exact norming constants, q = 0"},
        {"C3", "shift invariance"},
        {"C4", "delta fixed point"},
        {"C5", "norming decay, smooth q"},
        {"C6", "norming decay, step q"},
        {"C7", "ae_n analytic oracle"},
        {"C8", "eigenvalue remainder is o(1/n)"},
        {"C9", "successive approximations vs IVP"},
        {"C10", "k2 closed form, Dirichlet-Dirichlet"},
        {"C11", "k series, interior case"},
        {"C12", "oscillation certificate"},
    };
    return c;
}

std::string g(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::vector<BoundaryParams> archetypes()
{
    return {BoundaryParams(kPi / 4, kPi / 2), BoundaryParams(kPi, kPi / 3), BoundaryParams(kPi / 3, 0.0),
            BoundaryParams(kPi, 0.0)};
}

std::string bc_label(const BoundaryParams& bc)
{
    return "(" + g(bc.alpha()) + "," + g(bc.beta()) + ")";
}

/// Every eigenpair produced by any check, for the oscillation certificate.
struct Ledger {
    std::mutex mutex;
    int pairs = 0;
    int traces = 0;
    std::vector<std::string> mismatches;

    void pair(const std::string& where, const Eigenpair& p)
    {
        std::lock_guard lock(mutex);
        ++pairs;
        if (p.zero_count != p.n) mismatches.push_back(where + " n=" + std::to_string(p.n));
    }
    void trace(const std::string& where, int n, int zeros)
    {
        std::lock_guard lock(mutex);
        ++traces;
        if (zeros != n) mismatches.push_back(where + " trace n=" + std::to_string(n));
    }
};

class Runner {
public:
    Runner(const AcceptanceOptions& opts) : opts_(opts)
    {
        params_ = defaults();
        for (const auto& [k, v] : opts.overrides) {
            if (!params_.count(k)) throw DomainError("verify: unknown threshold '" + k + "'");
            params_[k] = v;
        }
    }

    double p(const std::string& key) const { return params_.at(key); }

    Spectrum spectrum(const std::string& where, const Potential& q, const BoundaryParams& bc, int lo, int hi)
    {
        SpectrumOptions so;
        so.threads = opts_.threads;
        Spectrum s = compute_spectrum(q, bc, lo, hi, so);
        for (const auto& pr : s.pairs) ledger_.pair(where, pr);
        return s;
    }

    /// aₙ for each pair, also certifying the zero count of the stored trace.
    std::vector<double> norms(const std::string& where, const Potential& q, const BoundaryParams& bc,
                              const std::vector<Eigenpair>& pairs)
    {
        std::vector<double> out(pairs.size());
        parallel_for(
            0, static_cast<int>(pairs.size()),
            [&](int i) {
                const auto& pr = pairs[static_cast<std::size_t>(i)];
                ledger_.trace(where, pr.n, eigenfunction(pr, q, bc).interior_zero_count());
                out[static_cast<std::size_t>(i)] = norming_a(q, bc, pr);
            },
            opts_.threads);
        return out;
    }

    CriterionResult c1();
    CriterionResult c2();
    CriterionResult c3();
    CriterionResult c4();
    CriterionResult c5();
    CriterionResult c6();
    CriterionResult c7();
    CriterionResult c8();
    CriterionResult c9();
    CriterionResult c10();
    CriterionResult c11();
    CriterionResult c12();

private:
    const AcceptanceOptions& opts_;
    std::map<std::string, double> params_;
    Ledger ledger_;
};

CriterionResult verdict(bool ok, std::string detail)
{
    CriterionResult r;
    r.verdict = ok ? Verdict::Pass : Verdict::Fail;
    r.detail = std::move(detail);
    return r;
}

CriterionResult Runner::c1()
{
    const double tol = p("C1.abs");
    const auto z = Potential::zero();
    double worst_dd = 0.0, worst_nn = 0.0;
    for (const auto& pr : spectrum("C1", z, BoundaryParams(kPi, 0.0), 0, 30).pairs)
        worst_dd = std::max(worst_dd, std::abs(pr.mu - (pr.n + 1.0) * (pr.n + 1.0)));
    for (const auto& pr : spectrum("C1", z, BoundaryParams(kPi / 2, kPi / 2), 0, 30).pairs)
        worst_nn = std::max(worst_nn, std::abs(pr.mu - double(pr.n) * pr.n));
    return verdict(worst_dd <= tol && worst_nn <= tol,
                   "max |mu - exact| " + g(worst_dd) + " (pi,0), " + g(worst_nn) + " (pi/2,pi/2), tol " + g(tol));
}

CriterionResult Runner::c2()
{
    const auto z = Potential::zero();
    const BoundaryParams dd(kPi, 0.0), nn(kPi / 2, kPi / 2);
    const auto sdd = spectrum("C2", z, dd, 0, 30);
    const auto snn = spectrum("C2", z, nn, 1, 30);
    const auto add = norms("C2", z, dd, sdd.pairs);
    const auto ann = norms("C2", z, nn, snn.pairs);
    double rel = 0.0, abs_err = 0.0;
    for (std::size_t i = 0; i < add.size(); ++i) {
        const double m = sdd.pairs[i].n + 1.0;
        const double exact = kPi / (2.0 * m * m);
        rel = std::max(rel, std::abs(add[i] - exact) / exact);
    }
    for (double a : ann) abs_err = std::max(abs_err, std::abs(a - kPi / 2));
    return verdict(rel <= p("C2.rel") && abs_err <= p("C2.abs"),
                   "max rel err " + g(rel) + " (pi,0), max abs err " + g(abs_err) + " (pi/2,pi/2)");
}

CriterionResult Runner::c3()
{
    const double tol = p("C3.abs");
    const auto q = Potential::step(2.0, kPi / 2);
    const auto qc = q.shifted(3.0);
    double dmu = 0.0, da = 0.0;
    for (const auto& bc : {BoundaryParams(kPi / 2, kPi / 2), BoundaryParams(kPi, 0.0)}) {
        const auto s0 = spectrum("C3", q, bc, 0, 30);
        const auto s1 = spectrum("C3", qc, bc, 0, 30);
        const auto a0 = norms("C3", q, bc, s0.pairs);
        const auto a1 = norms("C3", qc, bc, s1.pairs);
        for (std::size_t i = 0; i < a0.size(); ++i) {
            dmu = std::max(dmu, std::abs(s1.pairs[i].mu - s0.pairs[i].mu - 3.0));
            da = std::max(da, std::abs(a1[i] - a0[i]));
        }
    }
    return verdict(dmu <= tol && da <= tol, "max |dmu - 3| " + g(dmu) + ", max |da| " + g(da));
}

CriterionResult Runner::c4()
{
    bool ok = true;
    std::ostringstream d;
    for (const auto& bc : archetypes()) {
        double worst = 0.0;
        std::vector<int> ns;
        std::vector<double> defects;
        for (int n = 2; n <= 200; ++n) {
            const DeltaValue dv = solve_delta(n, bc);
            worst = std::max(worst, dv.residual);
            if (n >= 10 && n <= 100) {
                ns.push_back(n);
                defects.push_back(dv.value - delta_asymptotic(n, bc));
            }
        }
        const LogLogFit fit = loglog_fit(ns, defects, 1e-14);
        // Fewer than two points above the floor: the asymptotic form is exact.
        const bool slope_ok = fit.points < 2 || fit.slope <= p("C4.slope");
        ok = ok && worst <= p("C4.residual") && slope_ok;
        d << bc_label(bc) << " res " << g(worst) << " slope "
          << (fit.points < 2 ? std::string("exact") : g(fit.slope)) << "; ";
    }
    return verdict(ok, d.str());
}

CriterionResult Runner::c5()
{
    const auto q = Potential::smooth_test({0.0, 1.0});
    const BoundaryParams bc(kPi / 2, kPi / 2);
    const auto s = spectrum("C5", q, bc, 10, 60);
    const auto a = norms("C5", q, bc, s.pairs);
    std::vector<int> ns;
    std::vector<double> defects;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ns.push_back(s.pairs[i].n);
        defects.push_back(a[i] - kPi / 2);
    }
    // Defects below ten times the quadrature tolerance are noise.
    const LogLogFit fit = loglog_fit(ns, defects, 10.0 * kDefaultTol);
    return verdict(fit.points >= 2 && fit.slope <= p("C5.slope"),
                   "slope " + g(fit.slope) + " over " + std::to_string(fit.points) + " points");
}

CriterionResult Runner::c6()
{
    const auto q = Potential::step(2.0, kPi / 2);
    const BoundaryParams bc(kPi / 2, kPi / 2);
    const auto s = spectrum("C6", q, bc, 10, 60);
    const auto a = norms("C6", q, bc, s.pairs);
    const double limit = p("C6.ratio");

    // max over [30,60] against max over [10,30] of n²·|defect|.
    auto ratio = [&](bool with_ae) {
        double lo = 0.0, hi = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto& pr = s.pairs[i];
            const double ae = with_ae ? ae_n(q, pr.delta) : 0.0;
            const double v = double(pr.n) * pr.n * std::abs(a[i] - model_a(bc, pr.delta, ae));
            if (pr.n <= 30) lo = std::max(lo, v);
            if (pr.n >= 30) hi = std::max(hi, v);
        }
        return std::pair{lo, hi};
    };
    const auto [lo, hi] = ratio(true);
    const auto [lo0, hi0] = ratio(false);
    const bool bounded = hi <= limit * lo;
    const bool control_bounded = hi0 <= limit * lo0;
    std::string detail = "with ae: max " + g(lo) + " on [10,30], " + g(hi) + " on [30,60]; without ae: " + g(lo0) +
                         ", " + g(hi0);
    if (!bounded) return verdict(false, detail);
    if (!control_bounded) return verdict(true, detail + " (control unbounded)");
    // ae_n = O(1/n) for a step, so dropping it also leaves an O(1/n²) defect;
    // the control cannot diverge and only the first clause is decisive.
    CriterionResult r;
    r.verdict = Verdict::Waived;
    r.detail = detail + " (control also bounded: ae_n/n is itself O(1/n^2))";
    return r;
}

CriterionResult Runner::c7()
{
    const double tol = p("C7.abs");
    const auto q = Potential::constant(1.0);
    double worst_nn = 0.0, worst_dd = 0.0;
    for (int n = 2; n <= 50; ++n) {
        worst_nn = std::max(worst_nn,
                            std::abs(ae_n(q, solve_delta(n, BoundaryParams(kPi / 2, kPi / 2))) + kPi / (4.0 * n)));
        worst_dd = std::max(worst_dd,
                            std::abs(ae_n(q, solve_delta(n, BoundaryParams(kPi, 0.0))) + kPi / (4.0 * (n + 1))));
    }
    return verdict(worst_nn <= tol && worst_dd <= tol,
                   "max err " + g(worst_nn) + " (pi/2,pi/2), " + g(worst_dd) + " (pi,0)");
}

CriterionResult Runner::c8()
{
    const auto q = Potential::step(2.0, kPi / 2);
    const double mq = mean_q(q);
    bool ok = true;
    std::ostringstream d;
    for (const auto& bc : archetypes()) {
        const auto s = spectrum("C8", q, bc, 10, 10);
        const auto t = spectrum("C8", q, bc, 60, 60);
        auto l = [&](const Eigenpair& pr) {
            const double nu = pr.n + pr.delta.value;
            return std::abs(pr.n * (pr.lambda - nu - mq / (2.0 * nu)));
        };
        const double v10 = l(s.pairs.front()), v60 = l(t.pairs.front());
        ok = ok && v60 <= p("C8.ratio") * v10;
        d << bc_label(bc) << " " << g(v60 / v10) << "; ";
    }
    return verdict(ok, "ratio n=60/n=10 " + d.str());
}

CriterionResult Runner::c9()
{
    constexpr int kTerms = 12;
    const double band = p("C9.band");
    bool ok = true;
    double worst_excess = -1e300;
    std::ostringstream d;
    for (const auto& q : {Potential::constant(1.0), Potential::step(2.0, kPi / 2)}) {
        std::vector<double> r1;
        for (double lam : {5.0, 10.0, 20.0}) {
            const auto pic = picard_y2(q, lam, kTerms);
            const auto ivp = solve_ivp(q, lam * lam, true, 0.0, 1.0);
            const double diff = std::abs(pic.trace.back().y - ivp.back().y);
            const double allowed = pic.certificate.back() + p("C9.slack");
            worst_excess = std::max(worst_excess, diff - allowed);
            ok = ok && diff <= allowed;

            // R₁ = 2λ(y₁ − cos λx) − A(x, λ), sampled at 201 points.
            const auto y1 = solve_ivp(q, lam * lam, true, 1.0, 0.0);
            double sup = 0.0;
            for (int i = 0; i <= 200; ++i) {
                const double x = kPi * i / 200.0;
                sup = std::max(sup, std::abs(2.0 * lam * (y1.at(x).y - std::cos(lam * x)) - kernel_A(q, lam, x)));
            }
            r1.push_back(sup);
        }
        d << q.describe() << " R1 ratios";
        for (std::size_t i = 1; i < r1.size(); ++i) {
            const double ratio = r1[i] / r1[i - 1];
            ok = ok && std::abs(ratio - 0.5) <= 0.5 * band;
            d << " " << g(ratio);
        }
        d << "; ";
    }
    return verdict(ok, "endpoint diff - bound <= " + g(worst_excess) + "; " + d.str());
}

CriterionResult Runner::c10()
{
    const auto q = Potential::constant(1.0);
    const BoundaryParams bc(kPi, 0.0);
    const auto grid = uniform_grid(0.0, 2.0 * kPi, kDefaultKGridPoints);
    KSeriesOptions ko;
    ko.threads = opts_.threads;
    const auto res = k_partial_sum(q, bc, 400, grid, {50, 100, 200, 400}, ko);
    const double a = 1.0, b = 2.0 * kPi - 1.0;
    const double scale = sup_distance(grid, res.closed_form, std::vector<double>(grid.size(), 0.0), a, b);
    std::vector<double> errs;
    for (const auto& k2 : res.k2) errs.push_back(sup_distance(grid, k2, res.closed_form, a, b));
    bool ok = errs.back() <= p("C10.fraction") * scale;
    std::ostringstream d;
    d << "sup err";
    for (std::size_t i = 0; i < errs.size(); ++i) {
        d << " " << g(errs[i]);
        if (i > 0) ok = ok && errs[i] < errs[i - 1];
    }
    d << " vs sup closed form " << g(scale);
    return verdict(ok, d.str());
}

CriterionResult Runner::c11()
{
    const auto q = Potential::step(2.0, kPi / 2);
    const BoundaryParams bc(kPi / 3, kPi / 3);
    const auto grid = uniform_grid(0.0, 2.0 * kPi, kDefaultKGridPoints);
    KSeriesOptions ko;
    ko.threads = opts_.threads;
    const auto res = k_partial_sum(q, bc, 400, grid, {50, 100, 200, 400}, ko);
    const double a = 0.5, b = 2.0 * kPi - 0.5;
    bool ok = true;
    std::ostringstream d;
    d << "Cauchy";
    double prev = 0.0;
    for (std::size_t i = 0; i + 1 < res.k.size(); ++i) {
        const double c = sup_distance(grid, res.k[i + 1], res.k[i], a, b);
        if (i > 0) ok = ok && c < prev;
        prev = c;
        d << " " << g(c);
    }
    const ACReport rep = ac_diagnostic(grid, res.k, a, b);
    ok = ok && rep.variation_change <= p("C11.variation");
    d << "; TV change " << g(rep.variation_change);
    return verdict(ok, d.str());
}

CriterionResult Runner::c12()
{
    // Own sweep so the certificate is meaningful when run alone.
    const auto q = Potential::step(2.0, kPi / 2);
    for (const auto& bc : archetypes()) {
        const auto s = spectrum("C12", q, bc, 0, 20);
        norms("C12", q, bc, s.pairs);
    }
    std::lock_guard lock(ledger_.mutex);
    std::string detail = std::to_string(ledger_.pairs) + " pairs, " + std::to_string(ledger_.traces) + " traces";
    if (!ledger_.mismatches.empty()) detail += "; mismatch at " + ledger_.mismatches.front();
    return verdict(ledger_.mismatches.empty(), detail);
}

} // namespace

const char* verdict_name(Verdict v) noexcept
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Waived: return "WAIVED";
    }
    return "?";
}

std::vector<std::string> acceptance_ids()
{
    std::vector<std::string> ids;
    for (const auto& [id, name] : catalogue()) ids.push_back(id);
    return ids;
}

std::map<std::string, double> acceptance_parameters()
{
    return defaults();
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts)
{
    for (const auto& id : opts.only) {
        const auto ids = acceptance_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end())
            throw DomainError("verify: unknown criterion '" + id + "'");
    }
    Runner runner(opts);
    using Check = CriterionResult (Runner::*)();
    static const Check checks[] = {&Runner::c1, &Runner::c2, &Runner::c3, &Runner::c4,  &Runner::c5,  &Runner::c6,
                                   &Runner::c7, &Runner::c8, &Runner::c9, &Runner::c10, &Runner::c11, &Runner::c12};

    std::vector<CriterionResult> out;
    const auto& cat = catalogue();
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const auto& [id, name] = cat[i];
        if (!opts.only.empty() && !opts.only.count(id)) continue;
        CriterionResult r;
        try {
            r = (runner.*checks[i])();
        } catch (const std::exception& e) {
            r.verdict = Verdict::Fail;
            r.detail = std::string("error: ") + e.what();
        }
        while (r.detail.size() >= 2 && r.detail.compare(r.detail.size() - 2, 2, "; ") == 0)
            r.detail.resize(r.detail.size() - 2);
        r.id = id;
        r.name = name;
        if (opts.on_result) opts.on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_result(const CriterionResult& r)
{
    return r.id + " " + verdict_name(r.verdict) + " " + r.name + ": " + r.detail;
}

} // namespace slspec
