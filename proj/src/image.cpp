#include "glp/image.hpp"

#include "glp/errors.hpp"
#include "glp/numfmt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace glp {

RectDomain DomainPolicy::resolve(int width, int height) const
{
    switch (kind) {
    case Kind::unit: return RectDomain({Interval(0.0, 1.0), Interval(0.0, 1.0)});
    case Kind::pixel: return RectDomain({Interval(0.0, width), Interval(0.0, height)});
    case Kind::explicit_rect:
        if (!rect || rect->dimension() != 2)
            throw ArgumentError("explicit domain policy needs a 2D rectangle");
        return *rect;
    }
    throw ArgumentError("unknown domain policy");
}

ImageBuffer::ImageBuffer(int width, int height, int channels, std::vector<double> samples, RectDomain domain,
                         int maxval)
    : width_(width), height_(height), channels_(channels), maxval_(maxval), samples_(std::move(samples)),
      domain_(std::move(domain))
{
    if (width < 1 || height < 1)
        throw ArgumentError("image dimensions must be positive");
    if (channels != 1 && channels != 3)
        throw ArgumentError("images have 1 or 3 channels");
    if (maxval < 1 || maxval > 65535)
        throw ArgumentError("maxval must lie in [1, 65535]");
    if (domain_.dimension() != 2)
        throw ArgumentError("image domain must be two-dimensional");
    if (samples_.size() != static_cast<std::size_t>(width) * height * channels)
        throw ArgumentError("sample count does not match width * height * channels");
    for (double v : samples_)
        if (!(v >= 0.0 && v <= 1.0))
            throw RangeError("image sample " + format_g17(v) + " outside [0, 1]");
}

ImageBuffer ImageBuffer::filled(int width, int height, int channels, double value, RectDomain domain, int maxval)
{
    std::vector<double> s(static_cast<std::size_t>(std::max(width, 0)) * std::max(height, 0) * std::max(channels, 0),
                          value);
    return ImageBuffer(width, height, channels, std::move(s), std::move(domain), maxval);
}

std::size_t ImageBuffer::index(int c, int x, int y) const
{
    return (static_cast<std::size_t>(c) * height_ + static_cast<std::size_t>(y)) * width_ + static_cast<std::size_t>(x);
}

std::span<const double> ImageBuffer::plane(int c) const
{
    if (c < 0 || c >= channels_)
        throw ArgumentError("channel index out of range");
    const std::size_t n = static_cast<std::size_t>(width_) * height_;
    return std::span<const double>(samples_).subspan(static_cast<std::size_t>(c) * n, n);
}

ImageBuffer ImageBuffer::with_domain(RectDomain domain) const
{
    return ImageBuffer(width_, height_, channels_, samples_, std::move(domain), maxval_);
}

std::vector<double> ImageBuffer::x_centers() const { return cell_centers(domain_.axis(0), width_); }
std::vector<double> ImageBuffer::y_centers() const { return cell_centers(domain_.axis(1), height_); }

double ImageBuffer::pixel_area() const
{
    return domain_.axis(0).width() / width_ * (domain_.axis(1).width() / height_);
}

std::vector<double> cell_centers(const Interval& interval, int n)
{
    if (n < 1)
        throw ArgumentError("need at least one cell");
    std::vector<double> c(static_cast<std::size_t>(n));
    const double h = interval.width() / n;
    for (int k = 0; k < n; ++k)
        c[static_cast<std::size_t>(k)] = interval.a() + (k + 0.5) * h;
    return c;
}

ImageBuffer image_from_raster(const netpbm::Raster& raster, const DomainPolicy& policy)
{
    const std::size_t n = static_cast<std::size_t>(raster.width) * raster.height;
    std::vector<double> s(n * raster.channels);
    for (std::size_t p = 0; p < n; ++p)
        for (int c = 0; c < raster.channels; ++c)
            s[static_cast<std::size_t>(c) * n + p] =
                static_cast<double>(raster.samples[p * raster.channels + c]) / raster.maxval;
    return ImageBuffer(raster.width, raster.height, raster.channels, std::move(s),
                       policy.resolve(raster.width, raster.height), raster.maxval);
}

netpbm::Raster image_to_raster(const ImageBuffer& img)
{
    netpbm::Raster r;
    r.width = img.width();
    r.height = img.height();
    r.channels = img.channels();
    r.maxval = img.maxval();
    const std::size_t n = static_cast<std::size_t>(r.width) * r.height;
    r.samples.resize(n * r.channels);
    for (int c = 0; c < r.channels; ++c) {
        const auto plane = img.plane(c);
        for (std::size_t p = 0; p < n; ++p) {
            const double v = std::clamp(plane[p], 0.0, 1.0);
            r.samples[p * r.channels + c] = static_cast<std::uint16_t>(std::lround(v * r.maxval));
        }
    }
    return r;
}

ImageBuffer load_image(const std::string& path, const DomainPolicy& policy)
{
    return image_from_raster(netpbm::load(path), policy);
}

void save_image(const std::string& path, const ImageBuffer& img, bool ascii)
{
    netpbm::save(path, image_to_raster(img), ascii);
}

namespace {

// Row-major (degrees x cells) table W_m(centre_k) * cell_width.
std::vector<double> midpoint_table(const BasisSpec1D& axis, int cells)
{
    const std::vector<double> centers = cell_centers(axis.interval(), cells);
    const double h = axis.interval().width() / cells;
    const auto nd = static_cast<std::size_t>(axis.size());
    std::vector<double> column(nd);
    std::vector<double> table(nd * centers.size());
    for (std::size_t k = 0; k < centers.size(); ++k) {
        glp_values_all(axis, centers[k], column);
        for (std::size_t m = 0; m < nd; ++m)
            table[m * centers.size() + k] = column[m] * h;
    }
    return table;
}

// Row-major (degrees x cells) table of the integral of W_m over cell k, from
// the antiderivative (P_{m+1} - P_{m-1}) / (2m + 1) of P_m.
std::vector<double> cell_integral_table(const BasisSpec1D& axis, int cells)
{
    const Interval& iv = axis.interval();
    const int n_top = axis.max_degree();
    const auto nd = static_cast<std::size_t>(axis.size());
    const auto nc = static_cast<std::size_t>(cells);

    // antiderivatives at the cell edges, in the reference variable
    std::vector<double> prim((nc + 1) * nd);
    std::vector<double> p(static_cast<std::size_t>(n_top) + 2);
    for (std::size_t e = 0; e <= nc; ++e) {
        const double t = std::clamp(-1.0 + 2.0 * static_cast<double>(e) / cells, -1.0, 1.0);
        p[0] = 1.0;
        p[1] = t;
        for (int k = 1; k <= n_top; ++k)
            p[static_cast<std::size_t>(k) + 1] = ((2 * k + 1) * t * p[static_cast<std::size_t>(k)] - k * p[static_cast<std::size_t>(k) - 1]) / (k + 1);
        prim[e * nd] = t;
        for (std::size_t m = 1; m < nd; ++m)
            prim[e * nd + m] = (p[m + 1] - p[m - 1]) / static_cast<double>(2 * m + 1);
    }

    // dx = (b - a)/2 dt, W_m = sqrt(2/(b - a)) sqrt(m + 1/2) P_m(t)
    const double scale = std::sqrt(2.0 / iv.width()) * 0.5 * iv.width();
    std::vector<double> table(nd * nc);
    for (std::size_t m = 0; m < nd; ++m) {
        const double norm = scale * std::sqrt(static_cast<double>(m) + 0.5);
        for (std::size_t k = 0; k < nc; ++k)
            table[m * nc + k] = norm * (prim[(k + 1) * nd + m] - prim[k * nd + m]);
    }
    return table;
}

std::vector<double> analysis_table(const BasisSpec1D& axis, int cells, MomentRule rule)
{
    return rule == MomentRule::midpoint ? midpoint_table(axis, cells) : cell_integral_table(axis, cells);
}

// Row-major (cells x degrees) table W_m(centre_k).
std::vector<double> synthesis_table(const BasisSpec1D& axis, int cells)
{
    const std::vector<double> centers = cell_centers(axis.interval(), cells);
    const auto nd = static_cast<std::size_t>(axis.size());
    std::vector<double> table(centers.size() * nd);
    for (std::size_t k = 0; k < centers.size(); ++k)
        glp_values_all(axis, centers[k], std::span<double>(table.data() + k * nd, nd));
    return table;
}

std::vector<double> transpose(std::span<const double> in, std::size_t rows, std::size_t cols)
{
    std::vector<double> out(in.size());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            out[c * rows + r] = in[r * cols + c];
    return out;
}

void check_moment_set(const MomentSet& m)
{
    if (m.spec.dimension() != 2)
        throw ArgumentError("image moments need a 2D degree box");
    if (m.channels.size() != 1 && m.channels.size() != 3)
        throw ArgumentError("moment set needs 1 or 3 channels");
    for (const auto& t : m.channels)
        if (!(t.spec() == m.spec))
            throw ArgumentError("moment channels disagree on the degree box");
}

} // namespace

CoeffTensor analyze_plane(std::span<const double> plane, int width, int height, const BasisSpecND& spec,
                          MomentRule rule)
{
    if (spec.dimension() != 2)
        throw ArgumentError("plane analysis needs a 2D degree box");
    const int nx = spec.max_degrees()[0];
    const int ny = spec.max_degrees()[1];
    if (nx >= width || ny >= height)
        throw ArgumentError("degree box (" + std::to_string(nx) + ", " + std::to_string(ny)
                            + ") must be below the pixel counts (" + std::to_string(width) + ", "
                            + std::to_string(height) + ")");
    if (plane.size() != static_cast<std::size_t>(width) * height)
        throw ArgumentError("plane size does not match width * height");

    std::vector<std::size_t> shape{static_cast<std::size_t>(height), static_cast<std::size_t>(width)};
    auto work = contract_axis(plane, shape, 1, analysis_table(spec.axis_spec(0), width, rule),
                              static_cast<std::size_t>(nx) + 1);
    work = contract_axis(work, shape, 0, analysis_table(spec.axis_spec(1), height, rule),
                         static_cast<std::size_t>(ny) + 1);
    // shape is (Ny+1, Nx+1); coefficients are stored with the x degree slowest.
    return CoeffTensor(spec, transpose(work, shape[0], shape[1]));
}

MomentSet analyze_image(const ImageBuffer& img, int degree_x, int degree_y, MomentRule rule)
{
    BasisSpecND spec(img.domain(), {degree_x, degree_y});
    MomentSet m{spec, {}};
    for (int c = 0; c < img.channels(); ++c)
        m.channels.push_back(analyze_plane(img.plane(c), img.width(), img.height(), spec, rule));
    return m;
}

std::vector<double> reconstruct(const MomentSet& m, int width, int height)
{
    check_moment_set(m);
    if (width < 1 || height < 1)
        throw ArgumentError("image dimensions must be positive");
    const auto tx = synthesis_table(m.spec.axis_spec(0), width);
    const auto ty = synthesis_table(m.spec.axis_spec(1), height);
    const std::size_t n = static_cast<std::size_t>(width) * height;
    std::vector<double> out;
    out.reserve(n * m.channels.size());
    for (const auto& t : m.channels) {
        // (Nx+1, Ny+1) -> (Nx+1, H) -> (W, H) -> transpose to rows of y.
        std::vector<std::size_t> shape = m.spec.shape();
        auto work = contract_axis(t.data(), shape, 1, ty, static_cast<std::size_t>(height));
        work = contract_axis(work, shape, 0, tx, static_cast<std::size_t>(width));
        const auto plane = transpose(work, shape[0], shape[1]);
        out.insert(out.end(), plane.begin(), plane.end());
    }
    return out;
}

ImageBuffer synthesize_image(const MomentSet& m, int width, int height, bool clamp, int maxval)
{
    std::vector<double> values = reconstruct(m, width, height);
    for (double& v : values) {
        if (!clamp && (v < kOvershootLow || v > kOvershootHigh || !std::isfinite(v)))
            throw RangeError("reconstruction value " + format_g17(v) + " outside guard band [-0.25, 1.25]");
        v = std::clamp(v, 0.0, 1.0);
    }
    return ImageBuffer(width, height, static_cast<int>(m.channels.size()), std::move(values), m.spec.domain(), maxval);
}

ImageBuffer residual_image(const ImageBuffer& img, const MomentSet& m)
{
    check_moment_set(m);
    if (static_cast<std::size_t>(img.channels()) != m.channels.size())
        throw ArgumentError("image has " + std::to_string(img.channels()) + " channels, moments have "
                            + std::to_string(m.channels.size()));
    std::vector<double> r = reconstruct(m, img.width(), img.height());
    const auto s = img.samples();
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = std::clamp(0.5 + 0.5 * (s[i] - r[i]), 0.0, 1.0);
    return ImageBuffer(img.width(), img.height(), img.channels(), std::move(r), img.domain(), img.maxval());
}

QualityReport quality(const ImageBuffer& img, const MomentSet& m)
{
    check_moment_set(m);
    if (static_cast<std::size_t>(img.channels()) != m.channels.size())
        throw ArgumentError("image and moment set have different channel counts");
    const std::vector<double> r = reconstruct(m, img.width(), img.height());
    const auto s = img.samples();
    // The reconstruction lives on the moment domain; pixel area comes from it too.
    const double area = m.spec.domain().axis(0).width() / img.width() * (m.spec.domain().axis(1).width() / img.height());

    double sq_err = 0.0, energy = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double d = s[i] - r[i];
        sq_err += d * d;
        energy += s[i] * s[i];
    }
    double coeff_energy = 0.0;
    for (const auto& t : m.channels)
        coeff_energy += t.norm_sq();

    const double mse = sq_err / static_cast<double>(r.size());
    QualityReport q{};
    q.width = img.width();
    q.height = img.height();
    q.degree_x = m.spec.max_degrees()[0];
    q.degree_y = m.spec.max_degrees()[1];
    q.l2_error = std::sqrt(sq_err * area);
    q.psnr = mse == 0.0 ? std::numeric_limits<double>::infinity() : 10.0 * std::log10(1.0 / mse);
    energy *= area;
    q.parseval_ratio = energy == 0.0 ? (coeff_energy == 0.0 ? 1.0 : std::numeric_limits<double>::infinity())
                                     : coeff_energy / energy;
    return q;
}

std::string quality_csv_header() { return "width,height,Nx,Ny,l2_error,psnr_db,parseval_ratio"; }

std::string quality_csv_row(const QualityReport& q)
{
    return std::to_string(q.width) + ',' + std::to_string(q.height) + ',' + std::to_string(q.degree_x) + ','
           + std::to_string(q.degree_y) + ',' + format_g17(q.l2_error) + ',' + format_g17(q.psnr) + ','
           + format_g17(q.parseval_ratio);
}

CoeffFile to_coeff_file(const MomentSet& m, std::optional<ImageMeta> image)
{
    check_moment_set(m);
    return CoeffFile{m.spec, m.channels, image};
}

MomentSet from_coeff_file(const CoeffFile& f)
{
    MomentSet m{f.spec, f.blocks};
    check_moment_set(m);
    return m;
}

} // namespace glp
