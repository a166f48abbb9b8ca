#ifndef GLP_SU11_HPP
#define GLP_SU11_HPP

#include "glp/coeffs.hpp"

#include <span>
#include <vector>

namespace glp {

// Spectral (coefficient-space) form of the su(1,1) generators acting on
// truncated expansions sum_m c^m W_m, m = 0..N:
//   J+ e_m = (m+1) e_{m+1},  J- e_m = m e_{m-1},  J3 e_m = (m + 1/2) e_m.

enum class LadderKind { raise, lower, j3, number, casimir };

/// One application of a generator to a coefficient vector.
struct LadderAction {
    LadderKind kind;
    CoeffVector input;
    CoeffVector output;
    /// J+ only: c^N was non-zero and its image (N+1) c^N e_{N+1} was dropped.
    bool truncated = false;
};

enum class TopIndex {
    truncate, ///< keep the basis size, flag the lost top term
    extend,   ///< grow the output basis by one degree so nothing is lost
};

LadderAction apply_jplus(const CoeffVector& c, TopIndex top = TopIndex::truncate);
LadderAction apply_jminus(const CoeffVector& c);
LadderAction apply_j3(const CoeffVector& c);
LadderAction apply_number(const CoeffVector& c);

/// (C + 1/4) c with C = J3^2 - 1/2 {J+, J-}; J- J+ is composed without truncation.
LadderAction apply_casimir_shifted(const CoeffVector& c);

/// || (J3^2 - 1/2 {J+, J-} + 1/4) c ||; zero on every vector.
double casimir_defect(const CoeffVector& c);

struct CommutatorDefects {
    double j3_ladder;  ///< max over m and both signs of ||([J3, J+-] -+ J+-) e_m||
    double plus_minus; ///< max over m of ||([J+, J-] + 2 J3) e_m||
};

/// Checks over unit vectors e_0..e_{N-2} of a degree-N basis, by composing
/// the spectral operators. Requires N >= 2.
CommutatorDefects commutator_defects(int max_degree);

/// max over e_0..e_{N-1} of ||({J+, J-} - 2 J3^2 - 1/2) e_m||. Requires N >= 1.
double anticommutator_defect(int max_degree);

/// Differential raising operator applied to W_n, sampled at the points.
/// Equals (n+1) W_{n+1}. Requires 0 <= n <= max_degree - 1.
std::vector<double> jplus_differential(const BasisSpec1D& spec, int n, std::span<const double> points);

/// Differential lowering operator applied to W_n. Equals n W_{n-1}. Requires 0 <= n <= max_degree.
std::vector<double> jminus_differential(const BasisSpec1D& spec, int n, std::span<const double> points);

/// max_j |-(x-a)(x-b) W_n'' - 2 (x - (a+b)/2) W_n' + n(n+1) W_n| / (1 + |W_n|)
/// over the points, which must lie strictly inside (a, b).
double ode_residual(const BasisSpec1D& spec, int n, std::span<const double> points);

} // namespace glp

#endif // GLP_SU11_HPP
