#include "glp/su11.hpp"

#include "glp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace glp {

namespace {

BasisSpec1D grown(const BasisSpec1D& spec)
{
    return BasisSpec1D(spec.interval(), spec.max_degree() + 1, spec.max_degree() + 1);
}

CoeffVector restricted(const CoeffVector& c, const BasisSpec1D& spec)
{
    CoeffVector out(spec);
    for (int m = 0; m < std::min(c.size(), out.size()); ++m)
        out[m] = c[m];
    return out;
}

CoeffVector sub(const CoeffVector& x, const CoeffVector& y)
{
    CoeffVector out(x.spec());
    for (int m = 0; m < x.size(); ++m)
        out[m] = x[m] - y[m];
    return out;
}

CoeffVector axpy(double alpha, const CoeffVector& x, const CoeffVector& y)
{
    CoeffVector out(y.spec());
    for (int m = 0; m < y.size(); ++m)
        out[m] = alpha * x[m] + y[m];
    return out;
}

} // namespace

LadderAction apply_jplus(const CoeffVector& c, TopIndex top)
{
    const int n_top = c.max_degree();
    CoeffVector out(top == TopIndex::extend ? grown(c.spec()) : c.spec());
    for (int m = 0; m < n_top; ++m)
        out[m + 1] = (m + 1) * c[m];
    bool truncated = false;
    if (top == TopIndex::extend)
        out[n_top + 1] = (n_top + 1) * c[n_top];
    else
        truncated = c[n_top] != 0.0;
    return {LadderKind::raise, c, std::move(out), truncated};
}

LadderAction apply_jminus(const CoeffVector& c)
{
    CoeffVector out(c.spec());
    for (int m = 1; m < c.size(); ++m)
        out[m - 1] = m * c[m];
    return {LadderKind::lower, c, std::move(out)};
}

LadderAction apply_j3(const CoeffVector& c)
{
    CoeffVector out(c.spec());
    for (int m = 0; m < c.size(); ++m)
        out[m] = (m + 0.5) * c[m];
    return {LadderKind::j3, c, std::move(out)};
}

LadderAction apply_number(const CoeffVector& c)
{
    CoeffVector out(c.spec());
    for (int m = 0; m < c.size(); ++m)
        out[m] = m * c[m];
    return {LadderKind::number, c, std::move(out)};
}

LadderAction apply_casimir_shifted(const CoeffVector& c)
{
    const CoeffVector j3sq = apply_j3(apply_j3(c).output).output;
    const CoeffVector plus_minus = apply_jplus(apply_jminus(c).output).output;
    const CoeffVector minus_plus = restricted(apply_jminus(apply_jplus(c, TopIndex::extend).output).output, c.spec());
    CoeffVector out(c.spec());
    for (int m = 0; m < c.size(); ++m)
        out[m] = j3sq[m] - 0.5 * (plus_minus[m] + minus_plus[m]) + 0.25 * c[m];
    return {LadderKind::casimir, c, std::move(out)};
}

double casimir_defect(const CoeffVector& c) { return apply_casimir_shifted(c).output.norm(); }

CommutatorDefects commutator_defects(int max_degree)
{
    if (max_degree < 2)
        throw ArgumentError("commutator_defects needs N >= 2, got " + std::to_string(max_degree));
    const BasisSpec1D spec(Interval(-1.0, 1.0), max_degree, max_degree);
    const auto jp = [](const CoeffVector& v) { return apply_jplus(v).output; };
    const auto jm = [](const CoeffVector& v) { return apply_jminus(v).output; };
    const auto j3 = [](const CoeffVector& v) { return apply_j3(v).output; };

    CommutatorDefects d{0.0, 0.0};
    for (int m = 0; m <= max_degree - 2; ++m) {
        const CoeffVector e = CoeffVector::unit(spec, m);
        // [J3, J+] - J+
        const CoeffVector r_plus = sub(sub(j3(jp(e)), jp(j3(e))), jp(e));
        // [J3, J-] + J-
        const CoeffVector r_minus = axpy(1.0, jm(e), sub(j3(jm(e)), jm(j3(e))));
        // [J+, J-] + 2 J3
        const CoeffVector r_pm = axpy(2.0, j3(e), sub(jp(jm(e)), jm(jp(e))));
        d.j3_ladder = std::max({d.j3_ladder, r_plus.norm(), r_minus.norm()});
        d.plus_minus = std::max(d.plus_minus, r_pm.norm());
    }
    return d;
}

double anticommutator_defect(int max_degree)
{
    if (max_degree < 1)
        throw ArgumentError("anticommutator_defect needs N >= 1");
    const BasisSpec1D spec(Interval(-1.0, 1.0), max_degree, max_degree);
    double worst = 0.0;
    for (int m = 0; m <= max_degree - 1; ++m) {
        const CoeffVector e = CoeffVector::unit(spec, m);
        const CoeffVector pm = apply_jplus(apply_jminus(e).output).output;
        const CoeffVector mp = apply_jminus(apply_jplus(e).output).output;
        const CoeffVector j3sq = apply_j3(apply_j3(e).output).output;
        CoeffVector r(spec);
        for (int i = 0; i < r.size(); ++i)
            r[i] = pm[i] + mp[i] - 2.0 * j3sq[i] - 0.5 * e[i];
        worst = std::max(worst, r.norm());
    }
    return worst;
}

std::vector<double> jplus_differential(const BasisSpec1D& spec, int n, std::span<const double> points)
{
    if (n < 0 || n > spec.max_degree() - 1)
        throw ArgumentError("jplus_differential needs 0 <= n <= max_degree - 1, got n = " + std::to_string(n));
    std::vector<double> out;
    out.reserve(points.size());
    for (double x : points)
        out.push_back(raising_relation(spec, n, x));
    return out;
}

std::vector<double> jminus_differential(const BasisSpec1D& spec, int n, std::span<const double> points)
{
    if (n < 0 || n > spec.max_degree())
        throw ArgumentError("jminus_differential needs 0 <= n <= max_degree, got n = " + std::to_string(n));
    std::vector<double> out;
    out.reserve(points.size());
    for (double x : points)
        out.push_back(lowering_relation(spec, n, x));
    return out;
}

double ode_residual(const BasisSpec1D& spec, int n, std::span<const double> points)
{
    const Interval& iv = spec.interval();
    double worst = 0.0;
    for (double x : points) {
        const GlpJet w = glp_jet(spec, n, x);
        const double r = -(x - iv.a()) * (x - iv.b()) * w.d2 - 2.0 * (x - iv.midpoint()) * w.d1
                         + static_cast<double>(n) * (n + 1) * w.value;
        worst = std::max(worst, std::abs(r) / (1.0 + std::abs(w.value)));
    }
    return worst;
}

} // namespace glp
