#include "glp/errors.hpp"
#include "glp/tensor_basis.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using doctest::Approx;
using namespace glp;

namespace {
BasisSpecND square37(int nx, int ny)
{
    return BasisSpecND(RectDomain({Interval(3.0, 7.0), Interval(3.0, 7.0)}), {nx, ny});
}

std::vector<QuadratureRule> rules_for(const BasisSpecND& spec, int extra)
{
    std::vector<QuadratureRule> rules;
    for (int i = 0; i < spec.dimension(); ++i)
        rules.push_back(gauss_legendre(spec.domain().axis(i), spec.max_degrees()[static_cast<std::size_t>(i)] + extra));
    return rules;
}
} // namespace

TEST_SUITE("tensor_basis") {

TEST_CASE("domain and spec")
{
    const RectDomain d({Interval(0.0, 2.0), Interval(-1.0, 2.0), Interval(5.0, 5.5)});
    CHECK(d.dimension() == 3);
    CHECK(d.volume() == Approx(3.0));
    CHECK_THROWS_AS(RectDomain({}), ArgumentError);
    CHECK_THROWS_AS(BasisSpecND(d, {1, 2}), ArgumentError);
    CHECK_THROWS_AS(BasisSpecND(d, {1, -2, 0}), ArgumentError);
    const BasisSpecND s(d, {2, 3, 0});
    CHECK(s.size() == 12);
    CHECK(s.shape() == std::vector<std::size_t>{3, 4, 1});
    CHECK(s.axis_spec(1).interval() == Interval(-1.0, 2.0));
}

TEST_CASE("flat and multi indices are row-major")
{
    const std::vector<std::size_t> shape{3, 4, 2};
    const std::vector<int> idx{2, 1, 1};
    CHECK(flat_index(shape, idx) == 2 * 8 + 1 * 2 + 1);
    for (std::size_t f = 0; f < 24; ++f)
        CHECK(flat_index(shape, multi_index(shape, f)) == f);
    const std::vector<int> bad{3, 0, 0};
    CHECK_THROWS_AS(flat_index(shape, bad), ArgumentError);
}

TEST_CASE("eval_nd is the product of 1D values")
{
    const BasisSpecND s = square37(6, 8);
    const std::vector<int> m{5, 7};
    const std::vector<double> x{4.2, 6.1};
    CHECK(std::abs(eval_nd(s, m, x) - (-0.26137159543887704877)) < 1e-14);
    CHECK(eval_nd(s, m, x) == Approx(oracle::glp(3, 7, 5, 4.2) * oracle::glp(3, 7, 7, 6.1)).epsilon(1e-13));

    const BasisSpecND r(RectDomain({Interval(2.0, 7.0), Interval(2.0, 5.0)}), {13, 12});
    const std::vector<int> m2{13, 12};
    const std::vector<double> x2{3.3, 4.4};
    CHECK(std::abs(eval_nd(r, m2, x2) - 0.035521372633819608322) < 1e-14);

    const std::vector<double> out{8.0, 4.0};
    CHECK_THROWS_AS(eval_nd(s, m, out), DomainError);
}

TEST_CASE("contract_axis")
{
    // 2x3 input, contract axis 1 with a 2x3 matrix
    std::vector<double> in{1, 2, 3, 4, 5, 6};
    std::vector<std::size_t> shape{2, 3};
    const std::vector<double> mat{1, 0, 0, 1, 1, 1};
    const auto out = contract_axis(in, shape, 1, mat, 2);
    CHECK(shape == std::vector<std::size_t>{2, 2});
    CHECK(out == std::vector<double>{1, 6, 4, 15});

    std::vector<std::size_t> shape0{2, 3};
    const std::vector<double> sum{1, 1};
    const auto col = contract_axis(in, shape0, 0, sum, 1);
    CHECK(shape0 == std::vector<std::size_t>{1, 3});
    CHECK(col == std::vector<double>{5, 7, 9});
}

TEST_CASE("tensor Gram matrix on a rectangle")
{
    const BasisSpecND s(RectDomain({Interval(2.0, 7.0), Interval(2.0, 5.0)}), {13, 12});
    const auto rules = rules_for(s, 19);
    CHECK(gram_check_nd(s, rules) <= 1e-10);
}

TEST_CASE("projecting a tensor basis function gives a unit tensor")
{
    const BasisSpecND s = square37(4, 5);
    const auto rules = rules_for(s, 2);
    const std::vector<int> m{3, 2};
    const auto c = project_nd([&](std::span<const double> x) { return eval_nd(s, m, x); }, s, rules);
    for (std::size_t f = 0; f < c.size(); ++f) {
        const auto idx = multi_index(c.shape(), f);
        CHECK(std::abs(c.data()[f] - (idx == m ? 1.0 : 0.0)) < 1e-13);
    }
}

TEST_CASE("polynomial round trip in 2D and 3D")
{
    const BasisSpecND s = square37(8, 8);
    const auto rules = rules_for(s, 1);
    const auto f = [](std::span<const double> x) {
        return 0.1 * std::pow(x[0], 5) - 0.02 * std::pow(x[1], 7) + x[0] * x[1] - 3.0;
    };
    const auto c = project_nd(f, s, rules);
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(3.0, 7.0);
    for (int t = 0; t < 50; ++t) {
        const std::vector<double> x{u(gen), u(gen)};
        CHECK(synthesize_at(c, x) == Approx(f(x)).epsilon(1e-11));
    }

    const BasisSpecND s3(RectDomain({Interval(0.0, 1.0), Interval(-1.0, 1.0), Interval(2.0, 3.0)}), {2, 3, 1});
    const auto r3 = rules_for(s3, 1);
    const auto g = [](std::span<const double> x) { return x[0] * x[0] * x[1] * x[1] * x[1] * x[2] + 1.0; };
    const auto c3 = project_nd(g, s3, r3);
    const std::vector<double> p{0.3, -0.4, 2.9};
    CHECK(synthesize_at(c3, p) == Approx(g(p)).epsilon(1e-12));
}

TEST_CASE("synthesis on a grid and Parseval")
{
    const BasisSpecND s = square37(3, 2);
    CoeffTensor c(s);
    c.at({1, 1}) = 2.0;
    c.at({3, 0}) = -1.0;
    const auto rules = rules_for(s, 2);
    CHECK(synthesis_norm_sq_nd(c, rules) == Approx(5.0).epsilon(1e-13));
    CHECK(c.norm_sq() == 5.0);

    const TensorGrid grid{{3.0, 5.0, 7.0}, {4.0, 6.0}};
    const auto vals = synthesize_nd(c, grid);
    REQUIRE(vals.size() == 6);
    const std::vector<double> p{7.0, 6.0};
    CHECK(vals[5] == Approx(synthesize_at(c, p)).epsilon(1e-14));
    const std::vector<double> q{5.0, 4.0};
    CHECK(vals[2] == Approx(synthesize_at(c, q)).epsilon(1e-14).scale(1.0));
}

TEST_CASE("coefficient tensor validation")
{
    const BasisSpecND s = square37(1, 1);
    CHECK_THROWS_AS(CoeffTensor(s, {1.0, 2.0}), ArgumentError);
    CoeffTensor c(s);
    CHECK_THROWS_AS(c.at({2, 0}), ArgumentError);
    CHECK_THROWS_AS(project_samples_nd(std::vector<double>(3), s, rules_for(s, 1)), ArgumentError);
}

} // TEST_SUITE
