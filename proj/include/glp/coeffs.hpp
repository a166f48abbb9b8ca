#ifndef GLP_COEFFS_HPP
#define GLP_COEFFS_HPP

#include "glp/legendre.hpp"

#include <span>
#include <vector>

namespace glp {

/// Expansion coefficients f^0..f^N of a function on one interval.
class CoeffVector {
public:
    explicit CoeffVector(BasisSpec1D spec);
    CoeffVector(BasisSpec1D spec, std::vector<double> coeffs);

    /// e_m: unit coordinate at index m.
    static CoeffVector unit(BasisSpec1D spec, int m);

    const BasisSpec1D& spec() const noexcept { return spec_; }
    int size() const noexcept { return static_cast<int>(coeffs_.size()); }
    int max_degree() const noexcept { return spec_.max_degree(); }

    double operator[](int m) const { return coeffs_[static_cast<std::size_t>(m)]; }
    double& operator[](int m) { return coeffs_[static_cast<std::size_t>(m)]; }

    std::span<const double> values() const noexcept { return coeffs_; }
    std::span<double> values() noexcept { return coeffs_; }

    /// sum |f^m|^2
    double norm_sq() const noexcept;
    double norm() const noexcept;

    friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

private:
    BasisSpec1D spec_;
    std::vector<double> coeffs_;
};

} // namespace glp

#endif // GLP_COEFFS_HPP
