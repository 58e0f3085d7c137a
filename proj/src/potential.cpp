#include "slspec/potential.hpp"

#include "slspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace slspec {

SinCos exact_sincos(double angle)
{
    if (angle == 0.0) return {0.0, 1.0};
    if (angle == kPi / 2) return {1.0, 0.0};
    if (angle == kPi) return {0.0, -1.0};
    return {std::sin(angle), std::cos(angle)};
}

BoundaryParams::BoundaryParams(double alpha, double beta) : alpha_(alpha), beta_(beta)
{
    if (!(alpha > 0.0 && alpha <= kPi))
        throw DomainError("BoundaryParams: alpha must lie in (0, pi]");
    if (!(beta >= 0.0 && beta < kPi))
        throw DomainError("BoundaryParams: beta must lie in [0, pi)");
}

struct Potential::Impl {
    Kind kind = Kind::Named;
    Name name = Name::Zero;
    std::vector<double> params;
    std::vector<double> xs;
    std::vector<double> qs;
    double offset = 0.0;
    std::vector<double> breaks;

    double base(double x) const
    {
        if (kind == Kind::Grid) {
            auto it = std::upper_bound(xs.begin(), xs.end(), x);
            std::size_t i = it == xs.begin() ? 0 : static_cast<std::size_t>(it - xs.begin()) - 1;
            if (i + 1 >= xs.size()) return qs.back();
            const double w = (x - xs[i]) / (xs[i + 1] - xs[i]);
            return qs[i] + w * (qs[i + 1] - qs[i]);
        }
        switch (name) {
        case Name::Zero:
            return 0.0;
        case Name::Constant:
            return params[0];
        case Name::Step:
            return x <= params[1] ? params[0] : 0.0;
        case Name::SmoothTest: {
            double s = 0.0;
            for (std::size_t k = 0; k < params.size(); ++k)
                s += params[k] * std::cos(static_cast<double>(k) * x);
            return s;
        }
        }
        return 0.0;
    }
};

Potential::Potential(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Potential Potential::zero()
{
    auto impl = std::make_shared<Impl>();
    impl->name = Name::Zero;
    return Potential(std::move(impl));
}

Potential Potential::constant(double c)
{
    if (!std::isfinite(c)) throw DomainError("Potential::constant: value must be finite");
    auto impl = std::make_shared<Impl>();
    impl->name = Name::Constant;
    impl->params = {c};
    return Potential(std::move(impl));
}

Potential Potential::step(double c, double x0)
{
    if (!std::isfinite(c)) throw DomainError("Potential::step: value must be finite");
    if (!(x0 >= 0.0 && x0 <= kPi)) throw DomainError("Potential::step: x0 must lie in [0, pi]");
    auto impl = std::make_shared<Impl>();
    impl->name = Name::Step;
    impl->params = {c, x0};
    if (x0 > 0.0 && x0 < kPi) impl->breaks = {x0};
    return Potential(std::move(impl));
}

Potential Potential::smooth_test(std::vector<double> coeffs)
{
    for (double c : coeffs)
        if (!std::isfinite(c)) throw DomainError("Potential::smooth_test: coefficients must be finite");
    auto impl = std::make_shared<Impl>();
    impl->name = Name::SmoothTest;
    impl->params = std::move(coeffs);
    return Potential(std::move(impl));
}

Potential Potential::grid(std::vector<double> xs, std::vector<double> qs)
{
    if (xs.size() < 2 || xs.size() != qs.size())
        throw DomainError("Potential::grid: need at least two samples and matching lengths");
    if (xs.front() != 0.0 || std::abs(xs.back() - kPi) > 1e-15)
        throw DomainError("Potential::grid: abscissae must start at 0 and end at pi");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(qs[i]) || !std::isfinite(xs[i]))
            throw DomainError("Potential::grid: samples must be finite");
        if (i > 0 && !(xs[i] > xs[i - 1]))
            throw DomainError("Potential::grid: abscissae must be strictly increasing");
    }
    xs.back() = kPi;
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Grid;
    impl->breaks.assign(xs.begin() + 1, xs.end() - 1);
    impl->xs = std::move(xs);
    impl->qs = std::move(qs);
    return Potential(std::move(impl));
}

Potential Potential::shifted(double c) const
{
    if (!std::isfinite(c)) throw DomainError("Potential::shifted: shift must be finite");
    auto impl = std::make_shared<Impl>(*impl_);
    impl->offset += c;
    return Potential(std::move(impl));
}

double Potential::operator()(double x) const
{
    if (!(x >= 0.0 && x <= kPi)) {
        std::ostringstream msg;
        msg << "Potential: abscissa " << x << " outside [0, pi]";
        throw DomainError(msg.str());
    }
    return impl_->base(x) + impl_->offset;
}

Potential::Kind Potential::kind() const noexcept { return impl_->kind; }

Potential::Name Potential::name() const
{
    if (impl_->kind != Kind::Named) throw DomainError("Potential::name: grid potentials have no name");
    return impl_->name;
}

const std::vector<double>& Potential::params() const noexcept { return impl_->params; }
const std::vector<double>& Potential::xs() const noexcept { return impl_->xs; }
const std::vector<double>& Potential::qs() const noexcept { return impl_->qs; }
double Potential::offset() const noexcept { return impl_->offset; }
const std::vector<double>& Potential::breakpoints() const noexcept { return impl_->breaks; }

std::string Potential::describe() const
{
    std::ostringstream out;
    if (impl_->kind == Kind::Grid) {
        out << "grid(" << impl_->xs.size() << " samples)";
    } else {
        switch (impl_->name) {
        case Name::Zero: out << "zero"; break;
        case Name::Constant: out << "constant(" << impl_->params[0] << ")"; break;
        case Name::Step: out << "step(" << impl_->params[0] << ", " << impl_->params[1] << ")"; break;
        case Name::SmoothTest:
            out << "smooth-test(";
            for (std::size_t k = 0; k < impl_->params.size(); ++k)
                out << (k ? ", " : "") << impl_->params[k];
            out << ")";
            break;
        }
    }
    if (impl_->offset != 0.0) out << " + " << impl_->offset;
    return out.str();
}

CumulativeIntegrals::CumulativeIntegrals(const Potential& q, int cells) : q_(q)
{
    std::vector<double> breaks = q.breakpoints();
    // |q| has a kink wherever a linear grid segment crosses zero.
    if (q.kind() == Potential::Kind::Grid) {
        const auto& xs = q.xs();
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            const double a = q(xs[i]);
            const double b = q(xs[i + 1]);
            if (a * b < 0.0) breaks.push_back(xs[i] + (xs[i + 1] - xs[i]) * a / (a - b));
        }
    }
    nodes_ = merged_partition(0.0, kPi, cells, breaks);
    for (auto& col : table_) col.assign(nodes_.size(), 0.0);
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
        const double a = nodes_[i];
        const double b = nodes_[i + 1];
        table_[kAbs][i + 1] = table_[kAbs][i] + gauss_legendre5([&](double t) { return std::abs(q(t)); }, a, b);
        table_[kWeighted][i + 1] =
            table_[kWeighted][i] + gauss_legendre5([&](double t) { return (kPi - t) * q(t); }, a, b);
        table_[kPlain][i + 1] = table_[kPlain][i] + gauss_legendre5([&](double t) { return q(t); }, a, b);
    }
    l1_norm_ = table_[kAbs].back();
    mean_q_ = table_[kPlain].back() / kPi;
}

double CumulativeIntegrals::eval(Column col, double x) const
{
    if (!(x >= 0.0 && x <= kPi)) throw DomainError("CumulativeIntegrals: abscissa outside [0, pi]");
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
    const double a = nodes_[i];
    if (x == a) return table_[col][i];
    double tail = 0.0;
    switch (col) {
    case kAbs: tail = gauss_legendre5([&](double t) { return std::abs(q_(t)); }, a, x); break;
    case kWeighted: tail = gauss_legendre5([&](double t) { return (kPi - t) * q_(t); }, a, x); break;
    case kPlain: tail = gauss_legendre5([&](double t) { return q_(t); }, a, x); break;
    }
    return table_[col][i] + tail;
}

double CumulativeIntegrals::sigma0(double x) const { return eval(kAbs, x); }
double CumulativeIntegrals::sigma(double x) const { return eval(kWeighted, x); }
double CumulativeIntegrals::integral_q(double x) const { return eval(kPlain, x); }

double CumulativeIntegrals::sigma_tilde(double x) const
{
    if (!(x >= 0.0 && x <= 2.0 * kPi)) throw DomainError("sigma_tilde: abscissa outside [0, 2pi]");
    return sigma(std::min(0.5 * x, kPi));
}

double mean_q(const Potential& q, double tol)
{
    QuadOptions opts;
    opts.tol = tol;
    opts.breaks = q.breakpoints();
    return integrate([&](double t) { return q(t); }, 0.0, kPi, opts) / kPi;
}

CumulativeIntegrals sigma_functions(const Potential& q) { return CumulativeIntegrals(q); }

} // namespace slspec
