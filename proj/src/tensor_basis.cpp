#include "glp/tensor_basis.hpp"

#include "glp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace glp {

RectDomain::RectDomain(std::vector<Interval> axes) : axes_(std::move(axes))
{
    if (axes_.empty())
        throw ArgumentError("rectangle needs at least one axis");
}

double RectDomain::volume() const noexcept
{
    double v = 1.0;
    for (const auto& iv : axes_)
        v *= iv.width();
    return v;
}

BasisSpecND::BasisSpecND(RectDomain domain, std::vector<int> max_degrees)
    : domain_(std::move(domain)), max_degrees_(std::move(max_degrees))
{
    if (max_degrees_.size() != static_cast<std::size_t>(domain_.dimension()))
        throw ArgumentError("degree box has " + std::to_string(max_degrees_.size()) + " axes, domain has "
                            + std::to_string(domain_.dimension()));
    for (int i = 0; i < dimension(); ++i)
        (void)axis_spec(i); // validates each N_i
}

BasisSpec1D BasisSpecND::axis_spec(int i) const
{
    return BasisSpec1D(domain_.axis(i), max_degrees_.at(static_cast<std::size_t>(i)));
}

std::vector<std::size_t> BasisSpecND::shape() const
{
    std::vector<std::size_t> s;
    s.reserve(max_degrees_.size());
    for (int n : max_degrees_)
        s.push_back(static_cast<std::size_t>(n) + 1);
    return s;
}

std::size_t BasisSpecND::size() const
{
    std::size_t total = 1;
    for (int n : max_degrees_)
        total *= static_cast<std::size_t>(n) + 1;
    return total;
}

std::size_t flat_index(std::span<const std::size_t> shape, std::span<const int> index)
{
    if (index.size() != shape.size())
        throw ArgumentError("multi-index has wrong dimension");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (index[i] < 0 || static_cast<std::size_t>(index[i]) >= shape[i])
            throw ArgumentError("multi-index component " + std::to_string(index[i]) + " outside degree box");
        flat = flat * shape[i] + static_cast<std::size_t>(index[i]);
    }
    return flat;
}

std::vector<int> multi_index(std::span<const std::size_t> shape, std::size_t flat)
{
    std::vector<int> m(shape.size());
    for (std::size_t i = shape.size(); i-- > 0;) {
        m[i] = static_cast<int>(flat % shape[i]);
        flat /= shape[i];
    }
    return m;
}

CoeffTensor::CoeffTensor(BasisSpecND spec) : spec_(std::move(spec)), data_(spec_.size(), 0.0) {}

CoeffTensor::CoeffTensor(BasisSpecND spec, std::vector<double> data) : spec_(std::move(spec)), data_(std::move(data))
{
    if (data_.size() != spec_.size())
        throw ArgumentError("coefficient count " + std::to_string(data_.size()) + " does not match degree box size "
                            + std::to_string(spec_.size()));
}

double CoeffTensor::at(std::span<const int> m) const { return data_[flat_index(spec_.shape(), m)]; }

double& CoeffTensor::at(std::span<const int> m) { return data_[flat_index(spec_.shape(), m)]; }

double CoeffTensor::norm_sq() const noexcept
{
    double s = 0.0;
    for (double v : data_)
        s += v * v;
    return s;
}

double eval_nd(const BasisSpecND& spec, std::span<const int> m, std::span<const double> x)
{
    const auto dim = static_cast<std::size_t>(spec.dimension());
    if (m.size() != dim || x.size() != dim)
        throw ArgumentError("multi-index and point must match the domain dimension");
    double v = 1.0;
    for (std::size_t i = 0; i < dim; ++i)
        v *= glp_value(spec.axis_spec(static_cast<int>(i)), m[i], x[i]);
    return v;
}

std::vector<double> contract_axis(std::span<const double> in, std::vector<std::size_t>& shape, std::size_t axis,
                                  std::span<const double> matrix, std::size_t rows)
{
    const std::size_t cols = shape.at(axis);
    if (matrix.size() != rows * cols)
        throw ArgumentError("contraction matrix has wrong size");
    std::size_t outer = 1, inner = 1;
    for (std::size_t i = 0; i < axis; ++i)
        outer *= shape[i];
    for (std::size_t i = axis + 1; i < shape.size(); ++i)
        inner *= shape[i];
    if (in.size() != outer * cols * inner)
        throw ArgumentError("tensor size does not match its shape");

    std::vector<double> out(outer * rows * inner, 0.0);
    for (std::size_t o = 0; o < outer; ++o) {
        const double* src = in.data() + o * cols * inner;
        double* dst = out.data() + o * rows * inner;
        for (std::size_t r = 0; r < rows; ++r) {
            double* drow = dst + r * inner;
            for (std::size_t k = 0; k < cols; ++k) {
                const double a = matrix[r * cols + k];
                const double* srow = src + k * inner;
                for (std::size_t j = 0; j < inner; ++j)
                    drow[j] += a * srow[j];
            }
        }
    }
    shape[axis] = rows;
    return out;
}

TensorGrid quadrature_grid(std::span<const QuadratureRule> rules)
{
    TensorGrid grid;
    for (const auto& r : rules)
        grid.emplace_back(r.nodes().begin(), r.nodes().end());
    return grid;
}

CoeffTensor project_samples_nd(std::span<const double> samples, const BasisSpecND& spec,
                               std::span<const QuadratureRule> rules)
{
    const auto dim = static_cast<std::size_t>(spec.dimension());
    if (rules.size() != dim)
        throw ArgumentError("need one quadrature rule per axis");
    std::vector<std::size_t> shape;
    for (std::size_t i = 0; i < dim; ++i) {
        const BasisSpec1D axis = spec.axis_spec(static_cast<int>(i));
        if (!(rules[i].interval() == axis.interval()))
            throw ArgumentError("quadrature rule " + std::to_string(i) + " lives on a different interval");
        if (rules[i].order() < axis.size())
            throw ArgumentError("quadrature order on axis " + std::to_string(i) + " too small for its degree");
        shape.push_back(static_cast<std::size_t>(rules[i].order()));
    }
    std::vector<double> work(samples.begin(), samples.end());
    for (std::size_t i = 0; i < dim; ++i) {
        const BasisSpec1D axis = spec.axis_spec(static_cast<int>(i));
        const std::vector<double> table = weighted_basis_table(axis, rules[i]);
        work = contract_axis(work, shape, i, table, static_cast<std::size_t>(axis.size()));
    }
    return CoeffTensor(spec, std::move(work));
}

namespace {

// Row-major (points x degrees) table W_m(x_p) for one axis.
std::vector<double> synthesis_table(const BasisSpec1D& axis, std::span<const double> points)
{
    const auto nd = static_cast<std::size_t>(axis.size());
    std::vector<double> table(points.size() * nd);
    for (std::size_t p = 0; p < points.size(); ++p)
        glp_values_all(axis, points[p], std::span<double>(table.data() + p * nd, nd));
    return table;
}

} // namespace

std::vector<double> synthesize_nd(const CoeffTensor& c, const TensorGrid& grid)
{
    const BasisSpecND& spec = c.spec();
    const auto dim = static_cast<std::size_t>(spec.dimension());
    if (grid.size() != dim)
        throw ArgumentError("grid dimension does not match the coefficient tensor");
    std::vector<std::size_t> shape = spec.shape();
    std::vector<double> work(c.data().begin(), c.data().end());
    for (std::size_t i = 0; i < dim; ++i) {
        const std::vector<double> table = synthesis_table(spec.axis_spec(static_cast<int>(i)), grid[i]);
        work = contract_axis(work, shape, i, table, grid[i].size());
    }
    return work;
}

double synthesize_at(const CoeffTensor& c, std::span<const double> x)
{
    TensorGrid grid;
    for (double xi : x)
        grid.push_back({xi});
    return synthesize_nd(c, grid).at(0);
}

double gram_check_nd(const BasisSpecND& spec, std::span<const QuadratureRule> rules)
{
    const auto dim = static_cast<std::size_t>(spec.dimension());
    if (rules.size() != dim)
        throw ArgumentError("need one quadrature rule per axis");
    std::vector<std::vector<double>> grams;
    for (std::size_t i = 0; i < dim; ++i) {
        const BasisSpec1D axis = spec.axis_spec(static_cast<int>(i));
        if (rules[i].order() < axis.size())
            throw ArgumentError("quadrature order on axis " + std::to_string(i) + " too small for its degree");
        grams.push_back(gram_matrix(axis, rules[i]));
    }
    const std::vector<std::size_t> shape = spec.shape();
    const std::size_t total = spec.size();
    std::vector<std::vector<int>> index(total);
    for (std::size_t r = 0; r < total; ++r)
        index[r] = multi_index(shape, r);
    double worst = 0.0;
    for (std::size_t r = 0; r < total; ++r) {
        const std::vector<int>& mr = index[r];
        for (std::size_t s = 0; s < total; ++s) {
            const std::vector<int>& ms = index[s];
            double g = 1.0;
            for (std::size_t i = 0; i < dim; ++i)
                g *= grams[i][static_cast<std::size_t>(mr[i]) * shape[i] + static_cast<std::size_t>(ms[i])];
            worst = std::max(worst, std::abs(g - (r == s ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double synthesis_norm_sq_nd(const CoeffTensor& c, std::span<const QuadratureRule> rules)
{
    const std::vector<double> values = synthesize_nd(c, quadrature_grid(rules));
    std::vector<std::size_t> shape;
    for (const auto& r : rules)
        shape.push_back(static_cast<std::size_t>(r.order()));
    std::vector<double> sq(values.size());
    std::transform(values.begin(), values.end(), sq.begin(), [](double v) { return v * v; });
    for (std::size_t i = 0; i < rules.size(); ++i)
        sq = contract_axis(sq, shape, i, rules[i].weights(), 1);
    return sq.at(0);
}

} // namespace glp
