#include "glp/errors.hpp"
#include "glp/gelfand.hpp"
#include "glp/legendre.hpp"
#include "glp/su11.hpp"
#include "glp/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using doctest::Approx;
using namespace glp;

namespace {
const BasisSpec1D kSpec(Interval(3.0, 7.0), 5);
}

TEST_SUITE("gelfand_diag") {

TEST_CASE("seminorm weights count from m = 0")
{
    const CoeffVector c(kSpec, {1.0, 2.0, 0.0, 0.0, 0.0, 3.0});
    CHECK(seminorm(c, 0) == Approx(std::sqrt(14.0)));
    // 1 + 4 * 4 + 9 * 36
    CHECK(seminorm(c, 1) == Approx(std::sqrt(341.0)));
    CHECK(seminorm(c, 2) == Approx(std::sqrt(1.0 + 4.0 * 16.0 + 9.0 * 1296.0)));
    CHECK_THROWS_AS(seminorm(c, -1), ArgumentError);
    CHECK_THROWS_AS(seminorm(c, kMaxSeminormOrder + 1), ArgumentError);
}

TEST_CASE("seminorm survives large weights")
{
    const BasisSpec1D big(Interval(0.0, 1.0), 500);
    CoeffVector c = CoeffVector::unit(big, 500);
    c[500] = 1e300;
    const double p = seminorm(c, 16);
    CHECK(std::isinf(p));
    c[500] = 1e-200;
    CHECK(seminorm(c, 16) == Approx(1e-200 * std::pow(501.0, 16)).epsilon(1e-12));
}

TEST_CASE("nD seminorm")
{
    const BasisSpecND s(RectDomain({Interval(0.0, 1.0), Interval(0.0, 1.0)}), {2, 2});
    CoeffTensor t(s);
    t.at({1, 2}) = 2.0;
    const std::vector<int> k{1, 2};
    CHECK(seminorm_nd(t, k) == Approx(2.0 * 2.0 * 9.0));
}

TEST_CASE("continuity inequalities")
{
    // c = (1, 2, 3, 4, 5, 6), k = 1
    const CoeffVector c(kSpec, {1, 2, 3, 4, 5, 6});
    const auto r = continuity_check(c, 1);
    CHECK(r.all_hold());
    double jp = 0.0;
    for (int m = 0; m <= 5; ++m)
        jp += std::pow((m + 1) * (m + 1.0) * (m + 2.0), 2);
    CHECK(r.jplus.lhs == Approx(std::sqrt(jp)));
    CHECK(r.jplus.rhs == Approx(2.0 * seminorm(c, 2)));

    SeededUniform rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        CoeffVector v(BasisSpec1D(Interval(0.0, 1.0), 30));
        for (int m = 0; m < v.size(); ++m)
            v[m] = rng();
        for (int k = 0; k <= 3; ++k)
            CHECK(continuity_check(v, k).all_hold());
    }
}

TEST_CASE("membership profile")
{
    const CoeffVector c(kSpec, {1, 0, 0, 0, 0, 1});
    const auto p = membership_profile(c, 3);
    CHECK(p.orders == std::vector<int>{0, 1, 2, 3});
    for (std::size_t i = 1; i < p.values.size(); ++i)
        CHECK(p.values[i] > p.values[i - 1]);
}

TEST_CASE("uniform bounds on basis magnitude")
{
    const Interval iv(3.0, 7.0);
    const BasisSpec1D s(iv, 60);
    const auto pts = uniform_points(iv, 2001);
    CHECK(printed_uniform_bound(iv) == Approx(std::sqrt(0.5)));
    CHECK(max_basis_magnitude(s, 0, pts) <= printed_uniform_bound(iv) + 1e-12);
    CHECK(max_basis_magnitude(s, 1, pts) > printed_uniform_bound(iv));
    for (int m = 0; m <= 60; ++m)
        CHECK(max_basis_magnitude(s, m, pts) <= sharp_uniform_bound(iv, m) + 1e-9);
    CHECK(sharp_uniform_bound(iv, 60) == Approx(std::sqrt(0.5 * 60.5)));
}

TEST_CASE("pointwise bound")
{
    const CoeffVector c(kSpec, {0.3, -0.2, 0.1, 0.4, -0.5, 0.25});
    double peak = 0.0;
    for (double x : uniform_points(kSpec.interval(), 801)) {
        double v = 0.0;
        for (int m = 0; m <= 5; ++m)
            v += c[m] * glp_value(kSpec, m, x);
        peak = std::max(peak, std::abs(v));
    }
    CHECK(peak <= pointwise_bound(c) + 1e-12);

    // c_m = W_m(b) / (m+1)^2 concentrates the sum at x = b and exceeds the variant without sqrt(m+1/2).
    const BasisSpec1D s20(Interval(3.0, 7.0), 20);
    CoeffVector adv(s20);
    double at_b = 0.0;
    for (int m = 0; m <= 20; ++m) {
        adv[m] = glp_value(s20, m, 7.0) / ((m + 1.0) * (m + 1.0));
        at_b += adv[m] * glp_value(s20, m, 7.0);
    }
    CHECK(at_b > printed_pointwise_bound(adv));
    CHECK(at_b <= pointwise_bound(adv) + 1e-12);
}

TEST_CASE("spectrum CSV")
{
    const CoeffVector c(BasisSpec1D(Interval(0.0, 1.0), 2), {1.0, -0.5, 0.25});
    std::ostringstream os;
    write_spectrum_csv(os, c, 2);
    std::istringstream is(os.str());
    std::string header, row;
    std::getline(is, header);
    CHECK(header == "m,coeff,p0_contrib,p1_contrib,p2_contrib");
    int rows = 0;
    while (std::getline(is, row))
        ++rows;
    CHECK(rows == 3);
}

} // TEST_SUITE
