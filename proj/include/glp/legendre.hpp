#ifndef GLP_LEGENDRE_HPP
#define GLP_LEGENDRE_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace glp {

/// Default upper limit on the degree of a basis.
inline constexpr int kDefaultDegreeCap = 512;

/// Closed finite interval [a, b] with a < b.
class Interval {
public:
    Interval(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double width() const noexcept { return b_ - a_; }
    double midpoint() const noexcept { return 0.5 * (a_ + b_); }

    /// Affine map onto [-1, 1]: t = 2x/(b-a) - (b+a)/(b-a).
    double to_reference(double x) const noexcept { return (2.0 * x - (a_ + b_)) / (b_ - a_); }
    double from_reference(double t) const noexcept { return midpoint() + 0.5 * width() * t; }

    /// True when x lies in [a, b] up to 1e-9 * width.
    bool contains(double x) const noexcept;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double a_;
    double b_;
};

/// Interval plus the highest degree retained; the family W_0..W_N.
class BasisSpec1D {
public:
    BasisSpec1D(Interval interval, int max_degree, int degree_cap = kDefaultDegreeCap);

    const Interval& interval() const noexcept { return interval_; }
    int max_degree() const noexcept { return max_degree_; }
    int size() const noexcept { return max_degree_ + 1; }

    friend bool operator==(const BasisSpec1D&, const BasisSpec1D&) = default;

private:
    Interval interval_;
    int max_degree_;
};

/// Legendre polynomial P_n(x) by the three-term recurrence.
double legendre_p(int n, double x);

struct FlaggedValue {
    double value;
    bool extrapolated; ///< x was outside [-1, 1]
};

/// legendre_p that also reports whether x left the reference interval.
FlaggedValue legendre_p_flagged(int n, double x);

/// Normalized Legendre polynomial K_n(x) = sqrt(n + 1/2) P_n(x).
double normalized_legendre(int n, double x);

/// Generalized Legendre polynomial W_n(a, b, x) = sqrt(2/(b-a)) K_n(t(x)).
/// Throws DomainError if x is outside [a, b] by more than 1e-9 * width.
double glp_value(const BasisSpec1D& spec, int n, double x);

/// d/dx W_n(a, b, x).
double glp_derivative(const BasisSpec1D& spec, int n, double x);

/// d^2/dx^2 W_n(a, b, x).
double glp_second_derivative(const BasisSpec1D& spec, int n, double x);

/// W_0(x)..W_N(x) for the whole basis; out.size() must be spec.size().
void glp_values_all(const BasisSpec1D& spec, double x, std::span<double> out);

/// Value and first two x-derivatives of W_n at one point.
struct GlpJet {
    double value;
    double d1;
    double d2;
};

GlpJet glp_jet(const BasisSpec1D& spec, int n, double x);

/// Left-hand side of the raising relation; equals (n+1) W_{n+1}(x).
double raising_relation(const BasisSpec1D& spec, int n, double x);

/// Left-hand side of the lowering relation; equals n W_{n-1}(x). Zero for n = 0.
double lowering_relation(const BasisSpec1D& spec, int n, double x);

struct RecurrenceResiduals {
    double raising;  ///< max |raising_relation - (n+1) W_{n+1}|
    double lowering; ///< max |lowering_relation - n W_{n-1}|
};

/// Requires 1 <= n <= max_degree - 1.
RecurrenceResiduals recurrence_residuals(const BasisSpec1D& spec, int n, std::span<const double> points);

/// Samples of the basis at a list of points: values(n, j) = W_n(x_j).
class EvalTable {
public:
    EvalTable(BasisSpec1D spec, std::vector<double> points, bool with_derivatives = false);

    const BasisSpec1D& spec() const noexcept { return spec_; }
    const std::vector<double>& points() const noexcept { return points_; }
    double value(int n, std::size_t j) const { return values_[static_cast<std::size_t>(n) * points_.size() + j]; }
    bool has_derivatives() const noexcept { return derivs_.has_value(); }
    double derivative(int n, std::size_t j) const;

    /// Largest |W_n(x_j)| over all degrees and points.
    double max_abs() const;

    /// CSV with header x,W0,...,WN, one row per point, 17 significant digits.
    /// A non-empty `degrees` restricts the columns to those degrees.
    void write_csv(std::ostream& os, std::span<const int> degrees = {}) const;

private:
    BasisSpec1D spec_;
    std::vector<double> points_;
    std::vector<double> values_;
    std::optional<std::vector<double>> derivs_;
};

/// n equally spaced points from a to b inclusive (n >= 2), or the midpoint for n == 1.
std::vector<double> uniform_points(const Interval& interval, int n);

/// n equally spaced points strictly inside (a, b): a + (j + 1) (b - a) / (n + 1).
std::vector<double> interior_points(const Interval& interval, int n);

} // namespace glp

#endif // GLP_LEGENDRE_HPP
