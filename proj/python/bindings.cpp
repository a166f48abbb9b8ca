#include "glp/errors.hpp"
#include "glp/gelfand.hpp"
#include "glp/image.hpp"
#include "glp/legendre.hpp"
#include "glp/quadrature.hpp"
#include "glp/su11.hpp"
#include "glp/tensor_basis.hpp"
#include "glp/verify.hpp"

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace glp;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Array to_array(const std::vector<double>& v) { return Array(static_cast<py::ssize_t>(v.size()), v.data()); }

std::vector<double> to_vector(const Array& a)
{
    if (a.ndim() != 1)
        throw ArgumentError("expected a 1-D array");
    return {a.data(), a.data() + a.size()};
}

CoeffVector coeffs_on(const Array& c, double a, double b)
{
    std::vector<double> v = to_vector(c);
    if (v.empty())
        throw ArgumentError("coefficient array is empty");
    const int n = static_cast<int>(v.size()) - 1;
    return CoeffVector(BasisSpec1D(Interval(a, b), n, std::max(n, kDefaultDegreeCap)), std::move(v));
}

RectDomain rect(const std::vector<double>& d)
{
    if (d.size() != 4)
        throw ArgumentError("domain must be (a1, b1, a2, b2)");
    return RectDomain({Interval(d[0], d[1]), Interval(d[2], d[3])});
}

// (H, W) or (H, W, C) array in [0, 1] -> planar ImageBuffer
ImageBuffer image_from(const Array& img, const std::vector<double>& domain)
{
    if (img.ndim() != 2 && img.ndim() != 3)
        throw ArgumentError("image must have shape (H, W) or (H, W, C)");
    const auto h = static_cast<int>(img.shape(0));
    const auto w = static_cast<int>(img.shape(1));
    const int channels = img.ndim() == 3 ? static_cast<int>(img.shape(2)) : 1;
    std::vector<double> planar(static_cast<std::size_t>(w) * h * channels);
    const double* src = img.data();
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < channels; ++c)
                planar[(static_cast<std::size_t>(c) * h + y) * w + x] = src[(static_cast<std::size_t>(y) * w + x) * channels + c];
    return ImageBuffer(w, h, channels, std::move(planar), rect(domain));
}

MomentSet moments_from(const Array& m, const std::vector<double>& domain)
{
    if (m.ndim() != 3)
        throw ArgumentError("moments must have shape (C, Nx+1, Ny+1)");
    const BasisSpecND spec(rect(domain), {static_cast<int>(m.shape(1)) - 1, static_cast<int>(m.shape(2)) - 1});
    MomentSet set{spec, {}};
    const std::size_t block = spec.size();
    for (py::ssize_t c = 0; c < m.shape(0); ++c) {
        const double* p = m.data() + static_cast<std::size_t>(c) * block;
        set.channels.emplace_back(spec, std::vector<double>(p, p + block));
    }
    return set;
}

MomentRule rule_from(const std::string& name)
{
    if (name == "cell")
        return MomentRule::cell_integral;
    if (name == "midpoint")
        return MomentRule::midpoint;
    throw ArgumentError("rule must be 'cell' or 'midpoint'");
}

py::dict sides(const InequalitySides& s)
{
    py::dict d;
    d["lhs"] = s.lhs;
    d["rhs"] = s.rhs;
    d["holds"] = s.holds();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Generalized Legendre polynomial bases, image moments and su(1,1) checks.";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    m.def("legendre_p", &legendre_p, py::arg("n"), py::arg("x"));

    m.def(
        "glp_value",
        [](double a, double b, int n, const Array& x) {
            const BasisSpec1D spec(Interval(a, b), n, std::max(n, kDefaultDegreeCap));
            std::vector<double> out;
            for (double v : to_vector(x))
                out.push_back(glp_value(spec, n, v));
            return to_array(out);
        },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("x"), "W_n(a, b, x) at each point of x.");

    m.def(
        "glp_table",
        [](double a, double b, int max_degree, const Array& x) {
            const BasisSpec1D spec(Interval(a, b), max_degree);
            const auto pts = to_vector(x);
            Array out({static_cast<py::ssize_t>(pts.size()), static_cast<py::ssize_t>(spec.size())});
            double* p = out.mutable_data();
            for (std::size_t j = 0; j < pts.size(); ++j)
                glp_values_all(spec, pts[j], std::span<double>(p + j * spec.size(), static_cast<std::size_t>(spec.size())));
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("max_degree"), py::arg("x"),
        "Array of shape (len(x), max_degree + 1) with W_0..W_N at each point.");

    m.def(
        "gauss_legendre",
        [](double a, double b, int order) {
            const auto rule = gauss_legendre(Interval(a, b), order);
            return py::make_tuple(to_array({rule.nodes().begin(), rule.nodes().end()}),
                                  to_array({rule.weights().begin(), rule.weights().end()}));
        },
        py::arg("a"), py::arg("b"), py::arg("order"), "Gauss-Legendre (nodes, weights) on [a, b].");

    m.def(
        "gram_deviation",
        [](double a, double b, int max_degree, int order) {
            return gram_deviation(BasisSpec1D(Interval(a, b), max_degree), gauss_legendre(Interval(a, b), order));
        },
        py::arg("a"), py::arg("b"), py::arg("max_degree"), py::arg("order"));

    m.def(
        "project",
        [](const std::function<double(double)>& f, double a, double b, int max_degree, int order) {
            const BasisSpec1D spec(Interval(a, b), max_degree);
            const auto rule = gauss_legendre(spec.interval(), order > 0 ? order : max_degree + 1);
            const CoeffVector c = project_1d(f, spec, rule);
            return to_array({c.values().begin(), c.values().end()});
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("max_degree"), py::arg("order") = 0,
        "Coefficients of f on W_0..W_N by Gauss-Legendre quadrature.");

    m.def(
        "synthesize",
        [](const Array& c, double a, double b, const Array& x) {
            return to_array(synthesize_1d(coeffs_on(c, a, b), to_vector(x)));
        },
        py::arg("coeffs"), py::arg("a"), py::arg("b"), py::arg("x"));

    m.def(
        "jplus",
        [](const Array& c, bool extend) {
            const auto r = apply_jplus(coeffs_on(c, -1.0, 1.0), extend ? TopIndex::extend : TopIndex::truncate);
            return py::make_tuple(to_array({r.output.values().begin(), r.output.values().end()}), r.truncated);
        },
        py::arg("coeffs"), py::arg("extend") = false, "(J+ c, truncated flag).");
    m.def("jminus", [](const Array& c) {
        const auto r = apply_jminus(coeffs_on(c, -1.0, 1.0));
        return to_array({r.output.values().begin(), r.output.values().end()});
    });
    m.def("j3", [](const Array& c) {
        const auto r = apply_j3(coeffs_on(c, -1.0, 1.0));
        return to_array({r.output.values().begin(), r.output.values().end()});
    });
    m.def("casimir_defect", [](const Array& c) { return casimir_defect(coeffs_on(c, -1.0, 1.0)); });

    m.def("seminorm", [](const Array& c, int k) { return seminorm(coeffs_on(c, -1.0, 1.0), k); }, py::arg("coeffs"),
          py::arg("k"));
    m.def(
        "continuity_check",
        [](const Array& c, int k) {
            const auto r = continuity_check(coeffs_on(c, -1.0, 1.0), k);
            py::dict d;
            d["jplus"] = sides(r.jplus);
            d["jminus"] = sides(r.jminus);
            d["j3"] = sides(r.j3);
            return d;
        },
        py::arg("coeffs"), py::arg("k"));

    m.def(
        "analyze_image",
        [](const Array& img, int nx, int ny, std::vector<double> domain, const std::string& rule) {
            const MomentSet set = analyze_image(image_from(img, domain), nx, ny, rule_from(rule));
            Array out({static_cast<py::ssize_t>(set.channels.size()), static_cast<py::ssize_t>(nx + 1),
                       static_cast<py::ssize_t>(ny + 1)});
            double* p = out.mutable_data();
            for (const auto& t : set.channels)
                p = std::copy(t.data().begin(), t.data().end(), p);
            return out;
        },
        py::arg("image"), py::arg("nx"), py::arg("ny"), py::arg("domain") = std::vector<double>{0, 1, 0, 1},
        py::arg("rule") = "cell", "Moments of shape (C, nx+1, ny+1) of an (H, W[, C]) image in [0, 1].");

    m.def(
        "reconstruct",
        [](const Array& moments, int width, int height, std::vector<double> domain) {
            const MomentSet set = moments_from(moments, domain);
            const auto planar = reconstruct(set, width, height);
            const auto channels = static_cast<py::ssize_t>(set.channels.size());
            Array out({static_cast<py::ssize_t>(height), static_cast<py::ssize_t>(width), channels});
            double* p = out.mutable_data();
            for (py::ssize_t c = 0; c < channels; ++c)
                for (int y = 0; y < height; ++y)
                    for (int x = 0; x < width; ++x)
                        p[(static_cast<std::size_t>(y) * width + x) * channels + c] =
                            planar[(static_cast<std::size_t>(c) * height + y) * width + x];
            return channels == 1 ? Array(out.reshape({static_cast<py::ssize_t>(height), static_cast<py::ssize_t>(width)}))
                                 : out;
        },
        py::arg("moments"), py::arg("width"), py::arg("height"), py::arg("domain") = std::vector<double>{0, 1, 0, 1},
        "Unclamped reconstruction at pixel centres, shape (H, W) or (H, W, C).");

    m.def(
        "quality",
        [](const Array& img, const Array& moments, std::vector<double> domain) {
            const auto q = quality(image_from(img, domain), moments_from(moments, domain));
            py::dict d;
            d["l2_error"] = q.l2_error;
            d["psnr"] = q.psnr;
            d["parseval_ratio"] = q.parseval_ratio;
            return d;
        },
        py::arg("image"), py::arg("moments"), py::arg("domain") = std::vector<double>{0, 1, 0, 1});

    m.def(
        "verify",
        [](double a, double b, int max_degree, std::uint64_t seed) {
            VerifyOptions o;
            o.a = a;
            o.b = b;
            o.max_degree = max_degree;
            o.seed = seed;
            py::list out;
            for (const auto& r : run_verification(o)) {
                py::dict d;
                d["name"] = r.name;
                d["defect"] = r.defect;
                d["tolerance"] = r.tolerance;
                d["passed"] = r.passed;
                out.append(d);
            }
            return out;
        },
        py::arg("a") = 3.0, py::arg("b") = 7.0, py::arg("max_degree") = 40, py::arg("seed") = 20240917ULL,
        "Numerical invariant checks as a list of dicts.");
}
