#ifndef GLP_COEFF_IO_HPP
#define GLP_COEFF_IO_HPP

#include "glp/tensor_basis.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace glp {

/// Pixel geometry of the image a coefficient file was computed from.
struct ImageMeta {
    int width;
    int height;
    int maxval;

    friend bool operator==(const ImageMeta&, const ImageMeta&) = default;
};

/// One or more coefficient tensors sharing a degree box.
///
/// Text layout, values with 17 significant digits:
///
///     GLPCOEFF 1
///     dimension <n>
///     axis <a_1> <b_1> <N_1>
///     ...
///     axis <a_n> <b_n> <N_n>
///     image <width> <height> <maxval>      (optional)
///     blocks <k>
///     block 0
///     <prod (N_i + 1) values, row-major, first axis slowest>
///     ...
///     end
struct CoeffFile {
    BasisSpecND spec;
    std::vector<CoeffTensor> blocks;
    std::optional<ImageMeta> image;
};

void write_coeff_file(std::ostream& os, const CoeffFile& file);
CoeffFile read_coeff_file(std::istream& is);

void save_coeff_file(const std::string& path, const CoeffFile& file);
CoeffFile load_coeff_file(const std::string& path);

} // namespace glp

#endif // GLP_COEFF_IO_HPP
