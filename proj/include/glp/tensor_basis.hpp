#ifndef GLP_TENSOR_BASIS_HPP
#define GLP_TENSOR_BASIS_HPP

#include "glp/legendre.hpp"
#include "glp/quadrature.hpp"

#include <concepts>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace glp {

/// [a_1, b_1] x ... x [a_n, b_n]
class RectDomain {
public:
    explicit RectDomain(std::vector<Interval> axes);

    int dimension() const noexcept { return static_cast<int>(axes_.size()); }
    const Interval& axis(int i) const { return axes_.at(static_cast<std::size_t>(i)); }
    const std::vector<Interval>& axes() const noexcept { return axes_; }
    double volume() const noexcept;

    friend bool operator==(const RectDomain&, const RectDomain&) = default;

private:
    std::vector<Interval> axes_;
};

/// Degree box {0..N_1} x ... x {0..N_n} on a rectangle.
class BasisSpecND {
public:
    BasisSpecND(RectDomain domain, std::vector<int> max_degrees);

    const RectDomain& domain() const noexcept { return domain_; }
    int dimension() const noexcept { return domain_.dimension(); }
    const std::vector<int>& max_degrees() const noexcept { return max_degrees_; }
    BasisSpec1D axis_spec(int i) const;

    /// (N_1 + 1, ..., N_n + 1)
    std::vector<std::size_t> shape() const;
    std::size_t size() const;

    friend bool operator==(const BasisSpecND&, const BasisSpecND&) = default;

private:
    RectDomain domain_;
    std::vector<int> max_degrees_;
};

/// Row-major offset of a multi-index (first axis slowest).
std::size_t flat_index(std::span<const std::size_t> shape, std::span<const int> index);

/// Inverse of flat_index.
std::vector<int> multi_index(std::span<const std::size_t> shape, std::size_t flat);

/// Dense coefficient array f^m over a degree box, row-major.
class CoeffTensor {
public:
    explicit CoeffTensor(BasisSpecND spec);
    CoeffTensor(BasisSpecND spec, std::vector<double> data);

    const BasisSpecND& spec() const noexcept { return spec_; }
    std::vector<std::size_t> shape() const { return spec_.shape(); }
    std::size_t size() const noexcept { return data_.size(); }

    double at(std::span<const int> m) const;
    double& at(std::span<const int> m);
    double at(std::initializer_list<int> m) const { return at(std::span<const int>(m.begin(), m.size())); }
    double& at(std::initializer_list<int> m) { return at(std::span<const int>(m.begin(), m.size())); }

    std::span<const double> data() const noexcept { return data_; }
    std::span<double> data() noexcept { return data_; }

    double norm_sq() const noexcept;

    friend bool operator==(const CoeffTensor&, const CoeffTensor&) = default;

private:
    BasisSpecND spec_;
    std::vector<double> data_;
};

/// prod_i W_{m_i}(a_i, b_i, x_i)
double eval_nd(const BasisSpecND& spec, std::span<const int> m, std::span<const double> x);

/// Contract one axis of a row-major tensor with a dense matrix:
/// out[..., r, ...] = sum_k matrix[r * shape[axis] + k] * in[..., k, ...].
/// `shape` is updated in place to carry `rows` on that axis.
std::vector<double> contract_axis(std::span<const double> in, std::vector<std::size_t>& shape, std::size_t axis,
                                  std::span<const double> matrix, std::size_t rows);

/// Per-axis point lists; the grid is their Cartesian product.
using TensorGrid = std::vector<std::vector<double>>;

/// Quadrature tensor grid of the given rules.
TensorGrid quadrature_grid(std::span<const QuadratureRule> rules);

/// Coefficients from samples of f on the quadrature tensor grid (row-major,
/// first axis slowest). Contracts one axis at a time.
CoeffTensor project_samples_nd(std::span<const double> samples, const BasisSpecND& spec,
                               std::span<const QuadratureRule> rules);

/// f^m = integral of f W_m over the rectangle, by tensor Gauss-Legendre.
/// Requires rules[i].order() >= N_i + 1.
template <std::invocable<std::span<const double>> F>
CoeffTensor project_nd(F&& f, const BasisSpecND& spec, std::span<const QuadratureRule> rules)
{
    if (rules.size() != static_cast<std::size_t>(spec.dimension()))
        throw ArgumentError("need one quadrature rule per axis");
    const TensorGrid grid = quadrature_grid(rules);
    std::vector<std::size_t> shape;
    std::size_t total = 1;
    for (const auto& axis : grid) {
        shape.push_back(axis.size());
        total *= axis.size();
    }
    std::vector<double> samples(total);
    std::vector<double> point(grid.size());
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (std::size_t i = grid.size(); i-- > 0;) {
            point[i] = grid[i][rem % shape[i]];
            rem /= shape[i];
        }
        samples[flat] = f(std::span<const double>(point));
    }
    return project_samples_nd(samples, spec, rules);
}

/// sum_m c^m W_m on the Cartesian product of the per-axis points, row-major.
std::vector<double> synthesize_nd(const CoeffTensor& c, const TensorGrid& grid);

/// sum_m c^m W_m at a single point.
double synthesize_at(const CoeffTensor& c, std::span<const double> x);

/// Largest entrywise deviation from identity of the Gram matrix of the
/// tensor basis under the tensor rule. Uses G[m, m'] = prod_i G_i[m_i, m'_i].
double gram_check_nd(const BasisSpecND& spec, std::span<const QuadratureRule> rules);

/// Tensor-quadrature integral of |sum_m c^m W_m|^2.
double synthesis_norm_sq_nd(const CoeffTensor& c, std::span<const QuadratureRule> rules);

} // namespace glp

#endif // GLP_TENSOR_BASIS_HPP
