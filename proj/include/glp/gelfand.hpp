#ifndef GLP_GELFAND_HPP
#define GLP_GELFAND_HPP

#include "glp/coeffs.hpp"
#include "glp/tensor_basis.hpp"

#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

namespace glp {

inline constexpr int kMaxSeminormOrder = 16;

/// p_k(c) = sqrt(sum_m |c^m|^2 (m+1)^{2k}). Requires 0 <= k <= 16.
double seminorm(const CoeffVector& c, int k);

/// Per-axis weights prod_i (m_i + 1)^{2 k_i}.
double seminorm_nd(const CoeffTensor& c, std::span<const int> k);

/// Both sides of one continuity inequality p_k(A c) <= K p_{k+1}(c).
/// Relative slack for comparing two rounded sums that are equal in exact
/// arithmetic (p_0(J+ c) and p_1(c) share every term).
inline constexpr double kInequalityRoundoff = 64.0 * std::numeric_limits<double>::epsilon();

struct InequalitySides {
    double lhs;
    double rhs;
    bool holds() const noexcept { return lhs <= rhs * (1.0 + kInequalityRoundoff); }
    double slack() const noexcept { return rhs - lhs; }
};

struct ContinuityReport {
    InequalitySides jplus;  ///< p_k(J+ c) <= 2^k p_{k+1}(c)
    InequalitySides jminus; ///< p_k(J- c) <= p_{k+1}(c)
    InequalitySides j3;     ///< p_k(J3 c) <= p_{k+1}(c)
    bool all_hold() const noexcept { return jplus.holds() && jminus.holds() && j3.holds(); }
};

/// J+ is applied without truncation (the image of c^N is kept). Requires 0 <= k <= 15.
ContinuityReport continuity_check(const CoeffVector& c, int k);

struct SeminormProfile {
    std::vector<int> orders;
    std::vector<double> values;
};

/// p_0 .. p_{k_max}.
SeminormProfile membership_profile(const CoeffVector& c, int k_max);

/// max_j |W_m(x_j)| over the points.
double max_basis_magnitude(const BasisSpec1D& spec, int m, std::span<const double> points);

/// sqrt(2 / (b - a)), the printed uniform bound on |W_m|.
double printed_uniform_bound(const Interval& interval);

/// sqrt(2 / (b - a)) sqrt(m + 1/2); |P_m| <= 1 makes this sharp (equality at x = b).
double sharp_uniform_bound(const Interval& interval, int m);

/// Cauchy-Schwarz bound on sup_x |sum_m c^m W_m(x)| from the sharp basis bound:
/// sqrt(2/(b-a)) p_1(c) sqrt(sum_m (m + 1/2) / (m+1)^2).
double pointwise_bound(const CoeffVector& c);

/// The same bound with the printed basis bound: sqrt(2/(b-a)) p_1(c) sqrt(sum_m 1/(m+1)^2).
double printed_pointwise_bound(const CoeffVector& c);

/// CSV "m,coeff,p0_contrib,...,pK_contrib" with contributions |c^m|^2 (m+1)^{2k}.
void write_spectrum_csv(std::ostream& os, const CoeffVector& c, int k_max);

/// Flattened nD rows "m1,...,mn,coeff,p0_contrib,..." with isotropic orders
/// (k, ..., k); a leading "channel" column when `channel` >= 0.
void write_spectrum_csv(std::ostream& os, const CoeffTensor& c, int k_max, int channel = -1, bool header = true);

} // namespace glp

#endif // GLP_GELFAND_HPP
