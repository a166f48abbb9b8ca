#include "glp/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace glp {

namespace {

constexpr int kMaxNewtonSteps = 100;
constexpr double kNewtonTolerance = 1e-15;

struct PAndDerivative {
    double p;
    double dp;
};

// P_n(t) and P'_n(t) for |t| < 1.
PAndDerivative legendre_with_derivative(int n, double t)
{
    double p_prev = 1.0, p = t;
    for (int k = 1; k < n; ++k) {
        const double p_next = ((2 * k + 1) * t * p - k * p_prev) / (k + 1);
        p_prev = p;
        p = p_next;
    }
    if (n == 0)
        return {1.0, 0.0};
    return {p, n * (t * p - p_prev) / (t * t - 1.0)};
}

} // namespace

QuadratureRule gauss_legendre(const Interval& interval, int order)
{
    if (order < 1 || order > kMaxQuadratureOrder)
        throw ArgumentError("quadrature order must lie in [1, " + std::to_string(kMaxQuadratureOrder) + "], got "
                            + std::to_string(order));

    std::vector<double> t(static_cast<std::size_t>(order));
    std::vector<double> w(static_cast<std::size_t>(order));
    const int half = (order + 1) / 2;

    // Roots come out in decreasing order for i = 0, 1, ...; mirror the rest.
    for (int i = 0; i < half; ++i) {
        double root = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        PAndDerivative pd{};
        bool converged = false;
        for (int step = 0; step < kMaxNewtonSteps; ++step) {
            pd = legendre_with_derivative(order, root);
            const double delta = pd.p / pd.dp;
            root -= delta;
            if (std::abs(delta) <= kNewtonTolerance) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw NumericalError("Gauss-Legendre Newton iteration did not converge for order "
                                 + std::to_string(order));
        pd = legendre_with_derivative(order, root);
        const double weight = 2.0 / ((1.0 - root * root) * pd.dp * pd.dp);

        const auto hi = static_cast<std::size_t>(order - 1 - i);
        const auto lo = static_cast<std::size_t>(i);
        t[hi] = root;
        t[lo] = -root;
        w[hi] = weight;
        w[lo] = weight;
    }
    if (order % 2 == 1)
        t[static_cast<std::size_t>(order / 2)] = 0.0;

    const double half_width = 0.5 * interval.width();
    for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] = interval.from_reference(t[i]);
        w[i] *= half_width;
    }
    return QuadratureRule(interval, std::move(t), std::move(w));
}

std::vector<double> weighted_basis_table(const BasisSpec1D& spec, const QuadratureRule& rule)
{
    const auto nodes = rule.nodes();
    const auto weights = rule.weights();
    const std::size_t nq = nodes.size();
    std::vector<double> table(static_cast<std::size_t>(spec.size()) * nq);
    std::vector<double> column(static_cast<std::size_t>(spec.size()));
    for (std::size_t i = 0; i < nq; ++i) {
        glp_values_all(spec, nodes[i], column);
        for (std::size_t n = 0; n < column.size(); ++n)
            table[n * nq + i] = weights[i] * column[n];
    }
    return table;
}

double synthesize_1d(const CoeffVector& c, double x)
{
    std::vector<double> column(static_cast<std::size_t>(c.size()));
    glp_values_all(c.spec(), x, column);
    double s = 0.0;
    for (int m = 0; m < c.size(); ++m)
        s += c[m] * column[static_cast<std::size_t>(m)];
    return s;
}

std::vector<double> synthesize_1d(const CoeffVector& c, std::span<const double> points)
{
    std::vector<double> out;
    out.reserve(points.size());
    for (double x : points)
        out.push_back(synthesize_1d(c, x));
    return out;
}

double synthesis_norm_sq(const CoeffVector& c, const QuadratureRule& rule)
{
    return rule.integrate([&](double x) {
        const double v = synthesize_1d(c, x);
        return v * v;
    });
}

std::vector<double> gram_matrix(const BasisSpec1D& spec, const QuadratureRule& rule)
{
    if (!(rule.interval() == spec.interval()))
        throw ArgumentError("quadrature rule and basis live on different intervals");
    const auto nodes = rule.nodes();
    const auto weights = rule.weights();
    const auto n = static_cast<std::size_t>(spec.size());
    std::vector<double> g(n * n, 0.0);
    std::vector<double> column(n);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        glp_values_all(spec, nodes[i], column);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s)
                g[r * n + s] += weights[i] * column[r] * column[s];
    }
    return g;
}

double gram_deviation(const BasisSpec1D& spec, const QuadratureRule& rule)
{
    const auto g = gram_matrix(spec, rule);
    const auto n = static_cast<std::size_t>(spec.size());
    double dev = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            dev = std::max(dev, std::abs(g[r * n + s] - (r == s ? 1.0 : 0.0)));
    return dev;
}

} // namespace glp
