#include "glp/gelfand.hpp"

#include "glp/errors.hpp"
#include "glp/numfmt.hpp"
#include "glp/su11.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

namespace glp {

namespace {

// log of the largest weight we are willing to form directly.
constexpr double kDirectLogLimit = 300.0;

void check_order(int k, int limit)
{
    if (k < 0 || k > limit)
        throw ArgumentError("seminorm order " + std::to_string(k) + " outside [0, " + std::to_string(limit) + "]");
}

// sqrt(sum_i |v_i|^2 exp(2 log_w_i)), rescaled by the largest term when the
// weights would overflow.
double weighted_norm(std::span<const double> v, std::span<const double> log_w)
{
    double max_log = 0.0;
    for (double lw : log_w)
        max_log = std::max(max_log, lw);
    if (2.0 * max_log < kDirectLogLimit) {
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double w = std::exp(2.0 * log_w[i]);
            s += v[i] * v[i] * w;
        }
        return std::sqrt(s);
    }
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0.0)
            top = std::max(top, std::log(std::abs(v[i])) + log_w[i]);
    if (!std::isfinite(top))
        return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0.0)
            s += std::exp(2.0 * (std::log(std::abs(v[i])) + log_w[i] - top));
    return std::exp(top) * std::sqrt(s);
}

// (m+1)^{2k} as an exact product for small integers.
double power_weight(int m, int k)
{
    double w = 1.0;
    for (int i = 0; i < 2 * k; ++i)
        w *= m + 1;
    return w;
}

} // namespace

double seminorm(const CoeffVector& c, int k)
{
    check_order(k, kMaxSeminormOrder);
    const double top_log = k * std::log(static_cast<double>(c.size()));
    if (2.0 * top_log < kDirectLogLimit) {
        double s = 0.0;
        for (int m = 0; m < c.size(); ++m)
            s += c[m] * c[m] * power_weight(m, k);
        return std::sqrt(s);
    }
    std::vector<double> log_w(static_cast<std::size_t>(c.size()));
    for (int m = 0; m < c.size(); ++m)
        log_w[static_cast<std::size_t>(m)] = k * std::log(m + 1.0);
    return weighted_norm(c.values(), log_w);
}

double seminorm_nd(const CoeffTensor& c, std::span<const int> k)
{
    const auto dim = static_cast<std::size_t>(c.spec().dimension());
    if (k.size() != dim)
        throw ArgumentError("seminorm order needs one entry per axis");
    for (int ki : k)
        check_order(ki, kMaxSeminormOrder);
    const auto shape = c.shape();
    std::vector<double> log_w(c.size());
    for (std::size_t flat = 0; flat < c.size(); ++flat) {
        const std::vector<int> m = multi_index(shape, flat);
        double lw = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            lw += k[i] * std::log(m[i] + 1.0);
        log_w[flat] = lw;
    }
    return weighted_norm(c.data(), log_w);
}

ContinuityReport continuity_check(const CoeffVector& c, int k)
{
    check_order(k, kMaxSeminormOrder - 1);
    const double p_next = seminorm(c, k + 1);
    ContinuityReport r{};
    r.jplus = {seminorm(apply_jplus(c, TopIndex::extend).output, k), std::ldexp(1.0, k) * p_next};
    r.jminus = {seminorm(apply_jminus(c).output, k), p_next};
    r.j3 = {seminorm(apply_j3(c).output, k), p_next};
    return r;
}

SeminormProfile membership_profile(const CoeffVector& c, int k_max)
{
    check_order(k_max, kMaxSeminormOrder);
    SeminormProfile p;
    for (int k = 0; k <= k_max; ++k) {
        p.orders.push_back(k);
        p.values.push_back(seminorm(c, k));
    }
    return p;
}

double max_basis_magnitude(const BasisSpec1D& spec, int m, std::span<const double> points)
{
    double worst = 0.0;
    for (double x : points)
        worst = std::max(worst, std::abs(glp_value(spec, m, x)));
    return worst;
}

double printed_uniform_bound(const Interval& interval) { return std::sqrt(2.0 / interval.width()); }

double sharp_uniform_bound(const Interval& interval, int m)
{
    return std::sqrt(2.0 / interval.width()) * std::sqrt(m + 0.5);
}

double pointwise_bound(const CoeffVector& c)
{
    double tail = 0.0;
    for (int m = 0; m < c.size(); ++m)
        tail += (m + 0.5) / ((m + 1.0) * (m + 1.0));
    return printed_uniform_bound(c.spec().interval()) * seminorm(c, 1) * std::sqrt(tail);
}

double printed_pointwise_bound(const CoeffVector& c)
{
    double tail = 0.0;
    for (int m = 0; m < c.size(); ++m)
        tail += 1.0 / ((m + 1.0) * (m + 1.0));
    return printed_uniform_bound(c.spec().interval()) * seminorm(c, 1) * std::sqrt(tail);
}

void write_spectrum_csv(std::ostream& os, const CoeffVector& c, int k_max)
{
    check_order(k_max, kMaxSeminormOrder);
    os << "m,coeff";
    for (int k = 0; k <= k_max; ++k)
        os << ",p" << k << "_contrib";
    os << '\n';
    for (int m = 0; m < c.size(); ++m) {
        os << m << ',' << format_g17(c[m]);
        for (int k = 0; k <= k_max; ++k)
            os << ',' << format_g17(c[m] * c[m] * power_weight(m, k));
        os << '\n';
    }
}

void write_spectrum_csv(std::ostream& os, const CoeffTensor& c, int k_max, int channel, bool header)
{
    check_order(k_max, kMaxSeminormOrder);
    const int dim = c.spec().dimension();
    if (header) {
        if (channel >= 0)
            os << "channel,";
        for (int i = 0; i < dim; ++i)
            os << 'm' << (i + 1) << ',';
        os << "coeff";
        for (int k = 0; k <= k_max; ++k)
            os << ",p" << k << "_contrib";
        os << '\n';
    }
    const auto shape = c.shape();
    for (std::size_t flat = 0; flat < c.size(); ++flat) {
        const std::vector<int> m = multi_index(shape, flat);
        const double v = c.data()[flat];
        if (channel >= 0)
            os << channel << ',';
        for (int mi : m)
            os << mi << ',';
        os << format_g17(v);
        for (int k = 0; k <= k_max; ++k) {
            double w = 1.0;
            for (int mi : m)
                w *= power_weight(mi, k);
            os << ',' << format_g17(v * v * w);
        }
        os << '\n';
    }
}

} // namespace glp
