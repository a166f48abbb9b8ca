#include "glp/verify.hpp"

#include "glp/gelfand.hpp"
#include "glp/numfmt.hpp"
#include "glp/quadrature.hpp"
#include "glp/su11.hpp"
#include "glp/tensor_basis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace glp {

namespace {

CoeffVector random_vector(const BasisSpec1D& spec, SeededUniform& rng)
{
    CoeffVector c(spec);
    for (int m = 0; m < c.size(); ++m)
        c[m] = rng();
    return c;
}

class Collector {
public:
    explicit Collector(const VerifyOptions& o) : override_(o.tolerance_override) {}

    void add(std::string name, double defect, double tolerance)
    {
        const double tol = override_.value_or(tolerance);
        results_.push_back({std::move(name), defect, tol, defect <= tol});
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::optional<double> override_;
    std::vector<CheckResult> results_;
};

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& o)
{
    Collector out(o);
    const Interval iv(o.a, o.b);
    SeededUniform rng(o.seed);

    {
        const BasisSpec1D spec(iv, o.max_degree);
        out.add("gram_1d", gram_deviation(spec, gauss_legendre(iv, std::max(o.max_degree + 1, 64))), 1e-10);
    }
    {
        const BasisSpecND spec(RectDomain({Interval(2, 7), Interval(2, 5)}), {13, 12});
        const std::vector<QuadratureRule> rules{gauss_legendre(Interval(2, 7), 32), gauss_legendre(Interval(2, 5), 32)};
        out.add("gram_2d", gram_check_nd(spec, rules), 1e-10);
    }
    {
        const BasisSpec1D spec(iv, 51);
        const auto pts = uniform_points(iv, 201);
        double worst = 0.0;
        for (int n = 1; n <= 50; ++n) {
            const auto r = recurrence_residuals(spec, n, pts);
            worst = std::max({worst, r.raising, r.lowering});
        }
        out.add("recurrence", worst, 1e-8);
    }
    {
        const BasisSpec1D spec(iv, 31);
        const auto pts = interior_points(iv, 101);
        double up = 0.0, down = 0.0;
        for (int n = 0; n <= 30; ++n) {
            const auto jp = jplus_differential(spec, n, pts);
            const auto jm = jminus_differential(spec, n, pts);
            for (std::size_t j = 0; j < pts.size(); ++j) {
                up = std::max(up, std::abs(jp[j] - (n + 1) * glp_value(spec, n + 1, pts[j])));
                if (n > 0)
                    down = std::max(down, std::abs(jm[j] - n * glp_value(spec, n - 1, pts[j])));
                else
                    down = std::max(down, std::abs(jm[j]));
            }
        }
        out.add("ladder_jplus_differential", up, 1e-8);
        out.add("ladder_jminus_differential", down, 1e-8);
    }
    {
        const auto d = commutator_defects(o.algebra_degree);
        out.add("commutator_j3_jpm", d.j3_ladder, 1e-12);
        out.add("commutator_jplus_jminus", d.plus_minus, 1e-12);
        out.add("anticommutator", anticommutator_defect(o.algebra_degree), 1e-12);
        const BasisSpec1D spec(iv, std::min(o.algebra_degree, kDefaultDegreeCap));
        double worst = 0.0;
        for (int i = 0; i < o.random_vectors; ++i) {
            const CoeffVector c = random_vector(spec, rng);
            worst = std::max(worst, casimir_defect(c) / std::max(c.norm(), 1e-300));
        }
        out.add("casimir", worst, 1e-11);
    }
    {
        const BasisSpec1D spec(iv, 20);
        const auto pts = interior_points(iv, 51);
        double worst = 0.0;
        for (int n = 0; n <= 20; ++n)
            worst = std::max(worst, ode_residual(spec, n, pts));
        out.add("legendre_ode", worst, 1e-7);
    }
    {
        const BasisSpec1D spec(iv, 60);
        const auto pts = uniform_points(iv, 2001);
        double worst = 0.0;
        for (int m = 0; m <= 60; ++m)
            worst = std::max(worst, max_basis_magnitude(spec, m, pts) - sharp_uniform_bound(iv, m));
        out.add("uniform_bound_sharp", std::max(worst, 0.0), 1e-9);
    }
    {
        const BasisSpec1D spec(iv, 20);
        const auto pts = uniform_points(iv, 401);
        double cont = 0.0, pointwise = 0.0;
        for (int i = 0; i < o.random_vectors; ++i) {
            const CoeffVector c = random_vector(spec, rng);
            for (int k = 0; k <= 3; ++k) {
                const auto r = continuity_check(c, k);
                for (const InequalitySides* side : {&r.jplus, &r.jminus, &r.j3})
                    cont += side->holds() ? 0.0 : 1.0;
            }
            double sup = 0.0;
            for (double v : synthesize_1d(c, pts))
                sup = std::max(sup, std::abs(v));
            pointwise = std::max(pointwise, sup - pointwise_bound(c));
        }
        out.add("continuity_violations", cont, 0.0);
        out.add("pointwise_bound_violation", std::max(pointwise, 0.0), 1e-9);
    }
    {
        const BasisSpec1D spec(iv, o.max_degree);
        const QuadratureRule rule = gauss_legendre(iv, o.max_degree + 1);
        const CoeffVector c = random_vector(spec, rng);
        const CoeffVector back = project_1d([&](double x) { return synthesize_1d(c, x); }, spec, rule);
        double worst = 0.0;
        for (int m = 0; m < c.size(); ++m)
            worst = std::max(worst, std::abs(back[m] - c[m]));
        out.add("projection_roundtrip", worst, 1e-10);
        out.add("parseval_1d", std::abs(c.norm_sq() - synthesis_norm_sq(c, rule)), 1e-10);
    }
    return out.take();
}

bool all_passed(const std::vector<CheckResult>& results)
{
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

void write_verify_text(std::ostream& os, const std::vector<CheckResult>& results)
{
    char line[160];
    std::snprintf(line, sizeof line, "%-28s %14s %10s  %s\n", "check", "max_defect", "tolerance", "result");
    os << line;
    for (const auto& r : results) {
        std::snprintf(line, sizeof line, "%-28s %14.6e %10.1e  %s\n", r.name.c_str(), r.defect, r.tolerance,
                      r.passed ? "PASS" : "FAIL");
        os << line;
    }
}

void write_verify_csv(std::ostream& os, const std::vector<CheckResult>& results)
{
    os << "check,max_defect,tolerance,result\n";
    for (const auto& r : results)
        os << r.name << ',' << format_g17(r.defect) << ',' << format_g17(r.tolerance) << ','
           << (r.passed ? "PASS" : "FAIL") << '\n';
}

} // namespace glp
