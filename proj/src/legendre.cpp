#include "glp/legendre.hpp"

#include "glp/errors.hpp"
#include "glp/numfmt.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace glp {

namespace {

constexpr double kEndpointSlack = 1e-9;

void check_degree(int n)
{
    if (n < 0)
        throw ArgumentError("Legendre degree must be non-negative, got " + std::to_string(n));
}

void check_in_basis(const BasisSpec1D& spec, int n)
{
    check_degree(n);
    if (n > spec.max_degree())
        throw ArgumentError("degree " + std::to_string(n) + " exceeds basis max_degree "
                            + std::to_string(spec.max_degree()));
}

// Map x into [-1, 1]; rounding drift past the endpoints is clamped.
double reference_coordinate(const Interval& interval, double x)
{
    if (!interval.contains(x))
        throw DomainError("point " + format_g17(x) + " outside [" + format_g17(interval.a()) + ", "
                          + format_g17(interval.b()) + "]");
    return std::clamp(interval.to_reference(x), -1.0, 1.0);
}

// P_n, P'_n and P''_n at t. Derivatives use
//   P'_{k+1} = P'_{k-1} + (2k+1) P_k,   P''_{k+1} = P''_{k-1} + (2k+1) P'_k.
struct Jet {
    double p;
    double dp;
    double d2p;
};

Jet legendre_jet(int n, double t)
{
    double p_prev = 1.0, p = t;
    double dp_prev = 0.0, dp = 1.0;
    double d2p_prev = 0.0, d2p = 0.0;
    if (n == 0)
        return {1.0, 0.0, 0.0};
    for (int k = 1; k < n; ++k) {
        const double p_next = ((2 * k + 1) * t * p - k * p_prev) / (k + 1);
        const double dp_next = dp_prev + (2 * k + 1) * p;
        const double d2p_next = d2p_prev + (2 * k + 1) * dp;
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
        d2p_prev = d2p;
        d2p = d2p_next;
    }
    return {p, dp, d2p};
}

double norm_factor(int n) { return std::sqrt(n + 0.5); }

} // namespace

Interval::Interval(double a, double b) : a_(a), b_(b)
{
    if (!std::isfinite(a) || !std::isfinite(b))
        throw ArgumentError("interval endpoints must be finite");
    if (!(a < b))
        throw ArgumentError("interval requires a < b, got [" + format_g17(a) + ", " + format_g17(b) + "]");
}

bool Interval::contains(double x) const noexcept
{
    const double slack = kEndpointSlack * width();
    return x >= a_ - slack && x <= b_ + slack;
}

BasisSpec1D::BasisSpec1D(Interval interval, int max_degree, int degree_cap)
    : interval_(interval), max_degree_(max_degree)
{
    if (max_degree < 0)
        throw ArgumentError("max_degree must be non-negative");
    if (max_degree > degree_cap)
        throw ArgumentError("max_degree " + std::to_string(max_degree) + " exceeds cap "
                            + std::to_string(degree_cap));
}

double legendre_p(int n, double x)
{
    check_degree(n);
    if (n == 0)
        return 1.0;
    double p_prev = 1.0, p = x;
    for (int k = 1; k < n; ++k) {
        const double p_next = ((2 * k + 1) * x * p - k * p_prev) / (k + 1);
        p_prev = p;
        p = p_next;
    }
    return p;
}

FlaggedValue legendre_p_flagged(int n, double x)
{
    return {legendre_p(n, x), x < -1.0 || x > 1.0};
}

double normalized_legendre(int n, double x) { return norm_factor(n) * legendre_p(n, x); }

double glp_value(const BasisSpec1D& spec, int n, double x)
{
    check_in_basis(spec, n);
    const double t = reference_coordinate(spec.interval(), x);
    return std::sqrt(2.0 / spec.interval().width()) * normalized_legendre(n, t);
}

GlpJet glp_jet(const BasisSpec1D& spec, int n, double x)
{
    check_in_basis(spec, n);
    const Interval& iv = spec.interval();
    const double t = reference_coordinate(iv, x);
    const Jet j = legendre_jet(n, t);
    const double chain = 2.0 / iv.width();
    const double scale = std::sqrt(chain) * norm_factor(n);
    return {scale * j.p, scale * chain * j.dp, scale * chain * chain * j.d2p};
}

double glp_derivative(const BasisSpec1D& spec, int n, double x) { return glp_jet(spec, n, x).d1; }

double glp_second_derivative(const BasisSpec1D& spec, int n, double x) { return glp_jet(spec, n, x).d2; }

void glp_values_all(const BasisSpec1D& spec, double x, std::span<double> out)
{
    if (out.size() != static_cast<std::size_t>(spec.size()))
        throw ArgumentError("output span size does not match basis size");
    const double t = reference_coordinate(spec.interval(), x);
    const double scale = std::sqrt(2.0 / spec.interval().width());
    double p_prev = 1.0, p = t;
    out[0] = scale * norm_factor(0);
    if (spec.max_degree() >= 1)
        out[1] = scale * norm_factor(1) * t;
    for (int k = 1; k < spec.max_degree(); ++k) {
        const double p_next = ((2 * k + 1) * t * p - k * p_prev) / (k + 1);
        p_prev = p;
        p = p_next;
        out[static_cast<std::size_t>(k + 1)] = scale * norm_factor(k + 1) * p;
    }
}

double raising_relation(const BasisSpec1D& spec, int n, double x)
{
    const Interval& iv = spec.interval();
    const GlpJet w = glp_jet(spec, n, x);
    const double bracket = (x - iv.a()) * (x - iv.b()) * w.d1 + (n + 1) * (x - iv.midpoint()) * w.value;
    return 2.0 / iv.width() * std::sqrt((n + 1.5) / (n + 0.5)) * bracket;
}

double lowering_relation(const BasisSpec1D& spec, int n, double x)
{
    if (n == 0) {
        check_in_basis(spec, n);
        reference_coordinate(spec.interval(), x);
        return 0.0;
    }
    const Interval& iv = spec.interval();
    const GlpJet w = glp_jet(spec, n, x);
    const double bracket = -(x - iv.a()) * (x - iv.b()) * w.d1 + n * (x - iv.midpoint()) * w.value;
    return 2.0 / iv.width() * std::sqrt((n - 0.5) / (n + 0.5)) * bracket;
}

RecurrenceResiduals recurrence_residuals(const BasisSpec1D& spec, int n, std::span<const double> points)
{
    if (n < 1 || n > spec.max_degree() - 1)
        throw ArgumentError("recurrence residuals need 1 <= n <= max_degree - 1, got n = " + std::to_string(n));
    RecurrenceResiduals r{0.0, 0.0};
    for (double x : points) {
        const double up = raising_relation(spec, n, x) - (n + 1) * glp_value(spec, n + 1, x);
        const double down = lowering_relation(spec, n, x) - n * glp_value(spec, n - 1, x);
        r.raising = std::max(r.raising, std::abs(up));
        r.lowering = std::max(r.lowering, std::abs(down));
    }
    return r;
}

EvalTable::EvalTable(BasisSpec1D spec, std::vector<double> points, bool with_derivatives)
    : spec_(spec), points_(std::move(points))
{
    const std::size_t np = points_.size();
    const std::size_t nd = static_cast<std::size_t>(spec_.size());
    values_.assign(nd * np, 0.0);
    std::vector<double> column(nd);
    for (std::size_t j = 0; j < np; ++j) {
        glp_values_all(spec_, points_[j], column);
        for (std::size_t n = 0; n < nd; ++n)
            values_[n * np + j] = column[n];
    }
    if (with_derivatives) {
        std::vector<double> d(nd * np);
        for (std::size_t n = 0; n < nd; ++n)
            for (std::size_t j = 0; j < np; ++j)
                d[n * np + j] = glp_derivative(spec_, static_cast<int>(n), points_[j]);
        derivs_ = std::move(d);
    }
}

double EvalTable::derivative(int n, std::size_t j) const
{
    if (!derivs_)
        throw ArgumentError("EvalTable built without derivatives");
    return (*derivs_)[static_cast<std::size_t>(n) * points_.size() + j];
}

double EvalTable::max_abs() const
{
    double m = 0.0;
    for (double v : values_)
        m = std::max(m, std::abs(v));
    return m;
}

void EvalTable::write_csv(std::ostream& os, std::span<const int> degrees) const
{
    std::vector<int> cols(degrees.begin(), degrees.end());
    if (cols.empty())
        for (int n = 0; n < spec_.size(); ++n)
            cols.push_back(n);
    for (int n : cols)
        check_in_basis(spec_, n);

    os << "x";
    for (int n : cols)
        os << ",W" << n;
    os << '\n';
    for (std::size_t j = 0; j < points_.size(); ++j) {
        os << format_g17(points_[j]);
        for (int n : cols)
            os << ',' << format_g17(value(n, j));
        os << '\n';
    }
}

std::vector<double> uniform_points(const Interval& interval, int n)
{
    if (n < 1)
        throw ArgumentError("need at least one point");
    if (n == 1)
        return {interval.midpoint()};
    std::vector<double> pts(static_cast<std::size_t>(n));
    const double h = interval.width() / (n - 1);
    for (int j = 0; j < n; ++j)
        pts[static_cast<std::size_t>(j)] = interval.a() + j * h;
    pts.back() = interval.b();
    return pts;
}

std::vector<double> interior_points(const Interval& interval, int n)
{
    if (n < 1)
        throw ArgumentError("need at least one point");
    std::vector<double> pts(static_cast<std::size_t>(n));
    const double h = interval.width() / (n + 1);
    for (int j = 0; j < n; ++j)
        pts[static_cast<std::size_t>(j)] = interval.a() + (j + 1) * h;
    return pts;
}

} // namespace glp
