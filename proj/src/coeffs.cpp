#include "glp/coeffs.hpp"

#include "glp/errors.hpp"

#include <cmath>
#include <string>

namespace glp {

CoeffVector::CoeffVector(BasisSpec1D spec)
    : spec_(spec), coeffs_(static_cast<std::size_t>(spec.size()), 0.0) {}

CoeffVector::CoeffVector(BasisSpec1D spec, std::vector<double> coeffs) : spec_(spec), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != static_cast<std::size_t>(spec_.size()))
        throw ArgumentError("coefficient count " + std::to_string(coeffs_.size()) + " does not match basis size "
                            + std::to_string(spec_.size()));
}

CoeffVector CoeffVector::unit(BasisSpec1D spec, int m)
{
    if (m < 0 || m > spec.max_degree())
        throw ArgumentError("unit index " + std::to_string(m) + " outside basis");
    CoeffVector c(spec);
    c[m] = 1.0;
    return c;
}

double CoeffVector::norm_sq() const noexcept
{
    double s = 0.0;
    for (double v : coeffs_)
        s += v * v;
    return s;
}

double CoeffVector::norm() const noexcept { return std::sqrt(norm_sq()); }

} // namespace glp
