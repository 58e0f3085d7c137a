#include "slspec/cli.hpp"

#include "slspec/acceptance.hpp"
#include "slspec/error.hpp"
#include "slspec/io.hpp"
#include "slspec/kseries.hpp"
#include "slspec/norming.hpp"
#include "slspec/parallel.hpp"
#include "slspec/spectrum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace slspec::cli {

namespace {

struct Config {
    std::string command;
    std::string potential = R"({"kind":"named","name":"zero"})";
    std::string alpha;
    std::string beta;
    int n_min = 0;
    int n_max = 10;
    std::optional<double> tol;
    std::optional<int> grid_size;
    std::string out;
    std::string format = "csv";
    std::string segment;
    int N = 400;
    unsigned threads = 0;
    std::string only;
    std::vector<std::string> overrides;
};

/// Fully validated inputs, built before any computation starts.
struct Resolved {
    Potential q = Potential::zero();
    std::optional<BoundaryParams> bc;
    double seg_a = 0.5;
    double seg_b = 2.0 * kPi - 0.5;
    AcceptanceOptions acceptance;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

void add_common(CLI::App* sub, Config& c, bool needs_angles)
{
    sub->add_option("--potential", c.potential, "Inline JSON or path to a JSON potential");
    auto* a = sub->add_option("--alpha", c.alpha, "Left boundary angle in (0, pi]");
    auto* b = sub->add_option("--beta", c.beta, "Right boundary angle in [0, pi)");
    if (needs_angles) {
        a->required();
        b->required();
    }
    sub->add_option("--n-min", c.n_min, "First index");
    sub->add_option("--n-max", c.n_max, "Last index");
    sub->add_option("--tol", c.tol, "Tolerance (root width, quadrature or fixed point)");
    sub->add_option("--grid-size", c.grid_size, "ODE grid size, or x-grid points for kseries");
    sub->add_option("--out", c.out, "Output file (default stdout)");
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", c.threads, "Worker threads (0 = hardware)");
}

Resolved resolve(const Config& c)
{
    Resolved r;
    try {
        r.q = load_potential(c.potential);
        if (c.command != "verify") r.bc = BoundaryParams(parse_angle(c.alpha), parse_angle(c.beta));
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    if (c.n_min < 0 || c.n_max < c.n_min) throw ConfigError("need 0 <= n-min <= n-max");
    if (c.tol && !(*c.tol > 0.0)) throw ConfigError("--tol must be positive");
    if (c.grid_size && *c.grid_size < 64) throw ConfigError("--grid-size must be at least 64");
    if ((c.command == "norming" || c.command == "delta") && c.n_min < 2)
        throw ConfigError(c.command + " requires n-min >= 2");

    if (c.command == "kseries") {
        if (c.N < 2 || c.N > 400) throw ConfigError("--N must lie in [2, 400]");
        if (!c.segment.empty()) {
            const auto parts = split(c.segment, ',');
            if (parts.size() != 2) throw ConfigError("--segment expects a,b");
            try {
                r.seg_a = parse_angle(parts[0]);
                r.seg_b = parse_angle(parts[1]);
            } catch (const Error& e) {
                throw ConfigError(e.what());
            }
        }
        if (!(r.seg_a > 0.0 && r.seg_a < r.seg_b && r.seg_b < 2.0 * kPi))
            throw ConfigError("--segment needs 0 < a < b < 2pi");
        try {
            classify_k_case(*r.bc);
        } catch (const CaseError& e) {
            throw ConfigError(e.what());
        }
    }

    if (c.command == "verify") {
        for (const auto& id : split(c.only, ','))
            if (!id.empty()) r.acceptance.only.insert(id);
        const auto known = acceptance_parameters();
        for (const auto& kv : c.overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw ConfigError("--set expects key=value");
            const std::string key = kv.substr(0, eq);
            if (!known.count(key)) throw ConfigError("unknown threshold '" + key + "'");
            try {
                r.acceptance.overrides[key] = std::stod(kv.substr(eq + 1));
            } catch (const std::exception&) {
                throw ConfigError("bad value in --set " + kv);
            }
        }
        const auto ids = acceptance_ids();
        for (const auto& id : r.acceptance.only)
            if (std::find(ids.begin(), ids.end(), id) == ids.end())
                throw ConfigError("unknown criterion '" + id + "'");
        r.acceptance.threads = c.threads;
    }
    return r;
}

SolverOptions solver_options(const Config& c)
{
    SolverOptions s;
    if (c.grid_size) s.grid_size = *c.grid_size;
    return s;
}

void emit(const Table& t, const Config& c, std::ostream& out)
{
    if (c.format == "json")
        out << t.to_json().dump(2) << '\n';
    else
        out << t.to_csv();
}

void run_spectrum(const Config& c, const Resolved& r, std::ostream& out)
{
    SpectrumOptions so;
    so.solver = solver_options(c);
    so.threads = c.threads;
    if (c.tol) so.tol = *c.tol;
    const Spectrum s = compute_spectrum(r.q, *r.bc, c.n_min, c.n_max, so);
    const double mq = mean_q(r.q);
    // residual is rₙ = μₙ − (n+δₙ)² − [q]; char_residual is |Φ(μₙ)|.
    Table t{{"n", "delta", "mu", "lambda", "residual", "char_residual"}, {}};
    for (const auto& p : s.pairs) {
        const double nu = p.n + p.delta.value;
        t.rows.push_back({double(p.n), p.delta.value, p.mu, p.lambda, p.mu - nu * nu - mq, p.char_residual});
    }
    emit(t, c, out);
}

void run_norming(const Config& c, const Resolved& r, std::ostream& out)
{
    SpectrumOptions so;
    so.solver = solver_options(c);
    so.threads = c.threads;
    NormingOptions no;
    no.solver = so.solver;
    if (c.tol) no.tol = *c.tol;
    const Spectrum s = compute_spectrum(r.q, *r.bc, c.n_min, c.n_max, so);
    std::vector<NormingRecord> recs(s.pairs.size());
    parallel_for(
        0, static_cast<int>(recs.size()),
        [&](int i) { recs[std::size_t(i)] = norming_record(r.q, *r.bc, s.pairs[std::size_t(i)], no); }, c.threads);
    Table t{{"n", "a_n", "b_n", "ae_n", "model_a", "defect", "n2_defect"}, {}};
    for (const auto& rec : recs) {
        const double d = rec.rem_a.defect;
        t.rows.push_back({double(rec.n), rec.a_n, rec.b_n, rec.ae_n, rec.model_a, d, double(rec.n) * rec.n * d});
    }
    emit(t, c, out);
}

void run_delta(const Config& c, const Resolved& r, std::ostream& out)
{
    DeltaOptions d;
    if (c.tol) d.tol = *c.tol;
    Table t{{"n", "delta", "asymptotic", "difference"}, {}};
    for (int n = c.n_min; n <= c.n_max; ++n) {
        const DeltaValue v = solve_delta(n, *r.bc, d);
        const double a = delta_asymptotic(n, *r.bc);
        t.rows.push_back({double(n), v.value, a, v.value - a});
    }
    emit(t, c, out);
}

void run_kseries(const Config& c, const Resolved& r, std::ostream& out)
{
    KSeriesOptions ko;
    ko.threads = c.threads;
    if (c.tol) ko.tol = *c.tol;
    const auto grid = uniform_grid(0.0, 2.0 * kPi, c.grid_size.value_or(kDefaultKGridPoints));
    const auto res = k_partial_sum(r.q, *r.bc, c.N, grid, {}, ko);
    const ACReport rep = ac_diagnostic(grid, res.k, r.seg_a, r.seg_b);
    const bool dd = res.case_tag == KCase::DirichletDirichlet;

    Table values{{"x", "k", "k1", "k2"}, {}};
    if (dd) values.header.push_back("closed_form");
    for (std::size_t j = 0; j < grid.size(); ++j) {
        std::vector<double> row{grid[j], res.k.back()[j], res.k1.back()[j], res.k2.back()[j]};
        if (dd) row.push_back(res.closed_form[j]);
        values.rows.push_back(std::move(row));
    }

    // One row per truncation level; the Cauchy column is sup|S_i − S_{i−1}| on the segment.
    Table ac{{"segment_a", "segment_b", "truncation", "total_variation", "cauchy_sup", "max_jump"}, {}};
    for (std::size_t i = 0; i < res.k.size(); ++i) {
        const double cauchy = i ? sup_distance(grid, res.k[i], res.k[i - 1], r.seg_a, r.seg_b) : 0.0;
        const double jump = i + 1 == res.k.size() ? rep.max_jump : 0.0;
        ac.rows.push_back({r.seg_a, r.seg_b, double(res.truncations[i]), rep.variations[i], cauchy, jump});
    }

    if (c.format == "json") {
        nlohmann::json j;
        j["values"] = values.to_json();
        j["ac_report"] = ac.to_json();
        j["variation_change"] = rep.variation_change;
        out << j.dump(2) << '\n';
    } else {
        out << values.to_csv() << '\n' << ac.to_csv();
    }
}

std::string csv_quote(const std::string& s)
{
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

int run_verify(const Config& c, Resolved& r, std::ostream& out, std::ostream& err)
{
    r.acceptance.on_result = [&](const CriterionResult& cr) { err << format_result(cr) << '\n'; };
    const auto results = run_acceptance(r.acceptance);
    bool failed = false;
    if (c.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& cr : results)
            arr.push_back({{"id", cr.id}, {"name", cr.name}, {"verdict", verdict_name(cr.verdict)}, {"detail", cr.detail}});
        out << arr.dump(2) << '\n';
    } else {
        out << "id,verdict,name,detail\n";
        for (const auto& cr : results)
            out << cr.id << ',' << verdict_name(cr.verdict) << ',' << csv_quote(cr.name) << ',' << csv_quote(cr.detail)
                << '\n';
    }
    for (const auto& cr : results) failed = failed || cr.verdict == Verdict::Fail;
    return failed ? kComputeError : kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config c;
    CLI::App app("Sturm-Liouville spectra, norming constants and k-series", "slspec");
    app.require_subcommand(1);

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues mu_n for n-min..n-max");
    auto* norming = app.add_subcommand("norming", "Norming constants and their model");
    auto* delta = app.add_subcommand("delta", "Index shift delta_n against its asymptotic form");
    auto* kseries = app.add_subcommand("kseries", "Partial sums of the k series");
    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    for (auto* sub : {spectrum, norming, delta, kseries}) add_common(sub, c, true);
    add_common(verify, c, false);
    kseries->add_option("--segment", c.segment, "Sub-interval a,b of (0, 2pi) for the variation report");
    kseries->add_option("--N", c.N, "Largest truncation (2..400)");
    verify->add_option("--only", c.only, "Comma-separated criterion ids");
    verify->add_option("--set", c.overrides, "Threshold override key=value (repeatable)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }
    c.command = app.get_subcommands().front()->get_name();

    Resolved r;
    try {
        r = resolve(c);
    } catch (const ConfigError& e) {
        err << "slspec " << c.command << ": config error: " << e.what() << '\n';
        return kConfigError;
    }

    std::ofstream file;
    if (!c.out.empty()) {
        file.open(c.out, std::ios::binary);
        if (!file) {
            err << "slspec " << c.command << ": config error: cannot write '" << c.out << "'\n";
            return kConfigError;
        }
    }
    std::ostream& sink = c.out.empty() ? out : file;

    try {
        if (c.command == "spectrum") run_spectrum(c, r, sink);
        else if (c.command == "norming") run_norming(c, r, sink);
        else if (c.command == "delta") run_delta(c, r, sink);
        else if (c.command == "kseries") run_kseries(c, r, sink);
        else return run_verify(c, r, sink, err);
    } catch (const std::exception& e) {
        err << "slspec " << c.command << ": " << e.what() << '\n';
        return kComputeError;
    }
    return kOk;
}

} // namespace slspec::cli
