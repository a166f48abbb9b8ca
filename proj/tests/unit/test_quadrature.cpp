#include "glp/errors.hpp"
#include "glp/quadrature.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using doctest::Approx;
using namespace glp;

TEST_SUITE("quadrature") {

TEST_CASE("five-point rule on [-1,1]")
{
    const auto rule = gauss_legendre(Interval(-1.0, 1.0), 5);
    const double nodes[] = {-0.9061798459386639928, -0.53846931010568309104, 0.0, 0.53846931010568309104,
                            0.9061798459386639928};
    const double weights[] = {0.23692688505618908751, 0.47862867049936646804, 0.56888888888888888889,
                              0.47862867049936646804, 0.23692688505618908751};
    REQUIRE(rule.order() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(std::abs(rule.nodes()[i] - nodes[i]) < 1e-15);
        CHECK(std::abs(rule.weights()[i] - weights[i]) < 1e-15);
    }
}

TEST_CASE("rule is symmetric and weights sum to the width")
{
    for (int order : {1, 2, 7, 64, 257, 1024}) {
        const Interval iv(3.0, 7.0);
        const auto rule = gauss_legendre(iv, order);
        double sum = 0.0;
        for (int i = 0; i < order; ++i) {
            sum += rule.weights()[i];
            CHECK(rule.nodes()[i] - 5.0 == Approx(5.0 - rule.nodes()[order - 1 - i]).epsilon(1e-15).scale(1.0));
            if (i > 0)
                CHECK(rule.nodes()[i] > rule.nodes()[i - 1]);
        }
        CHECK(sum == Approx(4.0).epsilon(1e-13));
    }
}

TEST_CASE("exactness for polynomials of degree 2n-1")
{
    const Interval iv(-0.5, 2.0);
    for (int n = 1; n <= 12; ++n) {
        const auto rule = gauss_legendre(iv, n);
        for (int d = 0; d <= 2 * n - 1; ++d) {
            const double got = rule.integrate([&](double x) { return std::pow(x, d); });
            const double exact = (std::pow(2.0, d + 1) - std::pow(-0.5, d + 1)) / (d + 1);
            CHECK(got == Approx(exact).epsilon(1e-13));
        }
    }
}

TEST_CASE("smooth integrand")
{
    const auto rule = gauss_legendre(Interval(0.0, std::numbers::pi), 20);
    CHECK(rule.integrate([](double x) { return std::sin(x); }) == Approx(2.0).epsilon(1e-15));
}

TEST_CASE("argument validation")
{
    CHECK_THROWS_AS(gauss_legendre(Interval(0.0, 1.0), 0), ArgumentError);
    CHECK_THROWS_AS(gauss_legendre(Interval(0.0, 1.0), kMaxQuadratureOrder + 1), ArgumentError);
    const BasisSpec1D spec(Interval(0.0, 1.0), 10);
    CHECK_THROWS_AS(project_1d([](double) { return 1.0; }, spec, gauss_legendre(Interval(0.0, 1.0), 10)),
                    ArgumentError);
    CHECK_THROWS_AS(project_1d([](double) { return 1.0; }, spec, gauss_legendre(Interval(0.0, 2.0), 20)),
                    ArgumentError);
}

TEST_CASE("Gram matrix matches the exact inner products")
{
    const int N = 14;
    const BasisSpec1D spec(Interval(3.0, 7.0), N);
    const auto g = gram_matrix(spec, gauss_legendre(spec.interval(), N + 1));
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= N; ++m)
            CHECK(std::abs(g[static_cast<std::size_t>(n * (N + 1) + m)] - oracle::glp_inner_product(n, m)) < 1e-12);
}

TEST_CASE("Gram deviation stays small for large N")
{
    const BasisSpec1D spec(Interval(3.0, 7.0), 120);
    CHECK(gram_deviation(spec, gauss_legendre(spec.interval(), 128)) < 1e-10);
    // too few nodes: W_N W_N is not integrated exactly
    CHECK(gram_deviation(spec, gauss_legendre(spec.interval(), 100)) > 1e-3);
}

TEST_CASE("projection of a basis polynomial recovers a unit vector")
{
    const BasisSpec1D spec(Interval(3.0, 7.0), 12);
    const auto rule = gauss_legendre(spec.interval(), 16);
    const auto c = project_1d([&](double x) { return glp_value(spec, 7, x); }, spec, rule);
    for (int m = 0; m <= 12; ++m)
        CHECK(std::abs(c[m] - (m == 7 ? 1.0 : 0.0)) < 1e-13);
}

TEST_CASE("projection round trip and Parseval")
{
    const BasisSpec1D spec(Interval(-2.0, 1.0), 9);
    const auto rule = gauss_legendre(spec.interval(), 12);
    const auto f = [](double x) { return 1.0 - 2.0 * x + 0.3 * std::pow(x, 5) - 0.01 * std::pow(x, 9); };
    const auto c = project_1d(f, spec, rule);
    for (double x = -2.0; x <= 1.0; x += 0.125)
        CHECK(synthesize_1d(c, x) == Approx(f(x)).epsilon(1e-12).scale(1.0));
    const double l2 = rule.integrate([&](double x) { return f(x) * f(x); });
    CHECK(c.norm_sq() == Approx(l2).epsilon(1e-12));
    CHECK(synthesis_norm_sq(c, rule) == Approx(l2).epsilon(1e-12));

    const std::vector<double> pts{-2.0, 0.0, 1.0};
    const auto vals = synthesize_1d(c, pts);
    CHECK(vals[1] == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("projection is the best approximation in L2")
{
    const BasisSpec1D spec(Interval(0.0, 1.0), 4);
    const auto rule = gauss_legendre(spec.interval(), 40);
    const auto f = [](double x) { return std::exp(x) * std::cos(3.0 * x); };
    const auto c = project_1d(f, spec, rule);
    const auto err = [&](const CoeffVector& v) {
        return rule.integrate([&](double x) {
            const double r = f(x) - synthesize_1d(v, x);
            return r * r;
        });
    };
    const double best = err(c);
    for (int m = 0; m <= 4; ++m)
        for (double d : {-1e-2, 1e-2}) {
            CoeffVector p = c;
            p[m] += d;
            CHECK(err(p) > best);
            CHECK(err(p) - best == Approx(d * d).epsilon(1e-6));
        }
}

TEST_CASE("inner_product helper")
{
    const auto rule = gauss_legendre(Interval(0.0, 2.0), 4);
    CHECK(inner_product([](double x) { return x; }, [](double x) { return x * x; }, rule) == Approx(4.0));
}

} // TEST_SUITE
