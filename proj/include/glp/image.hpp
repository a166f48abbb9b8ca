#ifndef GLP_IMAGE_HPP
#define GLP_IMAGE_HPP

#include "glp/coeff_io.hpp"
#include "glp/netpbm.hpp"
#include "glp/tensor_basis.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace glp {

/// How pixel grids are placed on a rectangle.
struct DomainPolicy {
    enum class Kind { unit, pixel, explicit_rect };
    Kind kind = Kind::unit;
    std::optional<RectDomain> rect; ///< used when kind == explicit_rect

    static DomainPolicy unit() { return {Kind::unit, std::nullopt}; }
    static DomainPolicy pixel() { return {Kind::pixel, std::nullopt}; }
    static DomainPolicy explicit_rect(RectDomain r) { return {Kind::explicit_rect, std::move(r)}; }

    /// [0,1]^2, [0,W] x [0,H], or the explicit rectangle.
    RectDomain resolve(int width, int height) const;
};

/// Gray (1 channel) or RGB (3 channels) intensities in [0, 1].
/// Planar storage: sample (c, x, y) at (c * height + y) * width + x.
/// Axis 0 of the domain runs along x (columns), axis 1 along y (rows).
class ImageBuffer {
public:
    ImageBuffer(int width, int height, int channels, std::vector<double> samples, RectDomain domain,
                int maxval = 255);

    /// Constant image.
    static ImageBuffer filled(int width, int height, int channels, double value, RectDomain domain,
                              int maxval = 255);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    int channels() const noexcept { return channels_; }
    int maxval() const noexcept { return maxval_; }
    const RectDomain& domain() const noexcept { return domain_; }

    double at(int c, int x, int y) const { return samples_[index(c, x, y)]; }
    std::span<const double> plane(int c) const;
    std::span<const double> samples() const noexcept { return samples_; }

    /// Same pixels placed on another rectangle.
    ImageBuffer with_domain(RectDomain domain) const;

    /// Pixel-centre coordinates along x and y.
    std::vector<double> x_centers() const;
    std::vector<double> y_centers() const;
    double pixel_area() const;

private:
    std::size_t index(int c, int x, int y) const;

    int width_;
    int height_;
    int channels_;
    int maxval_;
    std::vector<double> samples_;
    RectDomain domain_;
};

/// Pixel centres of an n-cell partition of the interval.
std::vector<double> cell_centers(const Interval& interval, int n);

ImageBuffer image_from_raster(const netpbm::Raster& raster, const DomainPolicy& policy);

/// Quantizes with rounding; samples are clipped to [0, 1] first.
netpbm::Raster image_to_raster(const ImageBuffer& img);

ImageBuffer load_image(const std::string& path, const DomainPolicy& policy);
void save_image(const std::string& path, const ImageBuffer& img, bool ascii = false);

/// Per-channel moment tensors sharing one degree box.
struct MomentSet {
    BasisSpecND spec;
    std::vector<CoeffTensor> channels;
};

/// How a pixel's contribution to a moment is weighted.
enum class MomentRule {
    cell_integral, ///< s_k times the exact integral of W_m over the pixel cell
    midpoint,      ///< s_k times W_m(pixel centre) times the cell width
};

/// Moments d_{m,n} of the piecewise-constant image, per channel.
/// Requires N_x < width and N_y < height.
MomentSet analyze_image(const ImageBuffer& img, int degree_x, int degree_y,
                        MomentRule rule = MomentRule::cell_integral);

/// Moments of one plane (row-major, y slowest) of a pixel grid on spec's domain.
CoeffTensor analyze_plane(std::span<const double> plane, int width, int height, const BasisSpecND& spec,
                          MomentRule rule = MomentRule::cell_integral);

/// Truncated expansion evaluated at the pixel centres of a width x height
/// grid on the moment set's domain, unclipped. Planar layout as ImageBuffer.
std::vector<double> reconstruct(const MomentSet& m, int width, int height);

/// Guard band for unclamped synthesis.
inline constexpr double kOvershootLow = -0.25;
inline constexpr double kOvershootHigh = 1.25;

/// Reconstruction as an image. With clamp, values are clipped to [0, 1];
/// without, any value outside [-0.25, 1.25] raises RangeError and the
/// remaining in-band overshoot is clipped on storage.
ImageBuffer synthesize_image(const MomentSet& m, int width, int height, bool clamp, int maxval = 255);

/// 0.5 + (img - reconstruction) / 2, clipped to [0, 1].
ImageBuffer residual_image(const ImageBuffer& img, const MomentSet& m);

struct QualityReport {
    int width;
    int height;
    int degree_x;
    int degree_y;
    double l2_error;       ///< sqrt(sum (s - r)^2 dx dy) over all channels
    double psnr;           ///< 10 log10(1 / MSE); +inf when MSE == 0
    double parseval_ratio; ///< sum |d|^2 / sum s^2 dx dy
};

QualityReport quality(const ImageBuffer& img, const MomentSet& m);

/// Header "width,height,Nx,Ny,l2_error,psnr_db,parseval_ratio".
std::string quality_csv_header();
std::string quality_csv_row(const QualityReport& q);

CoeffFile to_coeff_file(const MomentSet& m, std::optional<ImageMeta> image = std::nullopt);
MomentSet from_coeff_file(const CoeffFile& f);

} // namespace glp

#endif // GLP_IMAGE_HPP
