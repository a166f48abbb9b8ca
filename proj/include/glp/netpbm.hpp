#ifndef GLP_NETPBM_HPP
#define GLP_NETPBM_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace glp::netpbm {

/// Raw PGM/PPM raster. Samples interleaved per pixel, rows top to bottom.
struct Raster {
    int width = 0;
    int height = 0;
    int channels = 1; ///< 1 = PGM, 3 = PPM
    int maxval = 255;
    std::vector<std::uint16_t> samples;
};

/// Reads P2, P3, P5 and P6 with maxval 1..65535. Throws FormatError with
/// the byte offset on malformed headers or truncated payloads.
Raster read(std::istream& is);
Raster load(const std::string& path);

/// Writes P5/P6, or P2/P3 when ascii is set. 16-bit binary samples are big-endian.
void write(std::ostream& os, const Raster& raster, bool ascii = false);
void save(const std::string& path, const Raster& raster, bool ascii = false);

} // namespace glp::netpbm

#endif // GLP_NETPBM_HPP
