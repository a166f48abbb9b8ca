#ifndef GLP_QUADRATURE_HPP
#define GLP_QUADRATURE_HPP

#include "glp/coeffs.hpp"
#include "glp/errors.hpp"
#include "glp/legendre.hpp"

#include <concepts>
#include <span>
#include <string>
#include <vector>

namespace glp {

inline constexpr int kMaxQuadratureOrder = 2048;

/// Gauss-Legendre rule on [a, b]. Immutable once built.
class QuadratureRule {
public:
    const Interval& interval() const noexcept { return interval_; }
    int order() const noexcept { return static_cast<int>(nodes_.size()); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> weights() const noexcept { return weights_; }

    template <std::invocable<double> F>
    double integrate(F&& f) const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            s += weights_[i] * f(nodes_[i]);
        return s;
    }

private:
    friend QuadratureRule gauss_legendre(const Interval&, int);
    QuadratureRule(Interval iv, std::vector<double> nodes, std::vector<double> weights)
        : interval_(iv), nodes_(std::move(nodes)), weights_(std::move(weights)) {}

    Interval interval_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Roots of P_order mapped onto the interval, with weights
/// w_i = (b - a) / ((1 - t_i^2) P'_order(t_i)^2). Requires 1 <= order <= 2048.
QuadratureRule gauss_legendre(const Interval& interval, int order);

/// sum_i w_i f(x_i) g(x_i)
template <std::invocable<double> F, std::invocable<double> G>
double inner_product(F&& f, G&& g, const QuadratureRule& rule)
{
    return rule.integrate([&](double x) { return f(x) * g(x); });
}

/// Basis table at the quadrature nodes, premultiplied by the weights:
/// row n holds w_i W_n(x_i).
std::vector<double> weighted_basis_table(const BasisSpec1D& spec, const QuadratureRule& rule);

/// Coefficients f^m = <W_m, f> for m = 0..N. Requires rule.order() >= N + 1.
template <std::invocable<double> F>
CoeffVector project_1d(F&& f, const BasisSpec1D& spec, const QuadratureRule& rule)
{
    if (rule.order() < spec.size())
        throw ArgumentError("quadrature order " + std::to_string(rule.order()) + " too small for max_degree "
                            + std::to_string(spec.max_degree()));
    if (!(rule.interval() == spec.interval()))
        throw ArgumentError("quadrature rule and basis live on different intervals");
    const auto nodes = rule.nodes();
    std::vector<double> samples(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        samples[i] = f(nodes[i]);
    const std::vector<double> table = weighted_basis_table(spec, rule);
    CoeffVector c(spec);
    for (int m = 0; m < spec.size(); ++m) {
        double s = 0.0;
        const double* row = table.data() + static_cast<std::size_t>(m) * nodes.size();
        for (std::size_t i = 0; i < nodes.size(); ++i)
            s += row[i] * samples[i];
        c[m] = s;
    }
    return c;
}

/// sum_m c^m W_m(x)
double synthesize_1d(const CoeffVector& c, double x);
std::vector<double> synthesize_1d(const CoeffVector& c, std::span<const double> points);

/// Quadrature L2 norm squared of the synthesis of c.
double synthesis_norm_sq(const CoeffVector& c, const QuadratureRule& rule);

/// G[n][m] = <W_n, W_m> under the rule, row-major (N+1) x (N+1).
std::vector<double> gram_matrix(const BasisSpec1D& spec, const QuadratureRule& rule);

/// Largest entrywise |G - I|.
double gram_deviation(const BasisSpec1D& spec, const QuadratureRule& rule);

} // namespace glp

#endif // GLP_QUADRATURE_HPP
