#include "glp/netpbm.hpp"

#include "glp/errors.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

namespace glp::netpbm {

namespace {

class Scanner {
public:
    explicit Scanner(std::istream& is) : is_(is) {}

    std::size_t offset() const noexcept { return offset_; }
    std::size_t token_start() const noexcept { return token_start_; }

    int get()
    {
        const int c = is_.get();
        if (c != std::char_traits<char>::eof())
            ++offset_;
        return c;
    }

    int peek() { return is_.peek(); }

    void skip_space_and_comments()
    {
        while (true) {
            const int c = peek();
            if (c == '#') {
                while (true) {
                    const int d = get();
                    if (d == '\n' || d == '\r' || d == std::char_traits<char>::eof())
                        break;
                }
            } else if (c != std::char_traits<char>::eof() && std::isspace(c)) {
                get();
            } else {
                return;
            }
        }
    }

    long number(const char* what)
    {
        skip_space_and_comments();
        const std::size_t start = offset_;
        token_start_ = start;
        long v = 0;
        int digits = 0;
        while (true) {
            const int c = peek();
            if (c == std::char_traits<char>::eof() || !std::isdigit(c))
                break;
            get();
            v = v * 10 + (c - '0');
            if (v > 1'000'000'000)
                throw FormatError(std::string(what) + " too large", start);
            ++digits;
        }
        if (digits == 0) {
            if (peek() == std::char_traits<char>::eof())
                throw FormatError(std::string("truncated file while reading ") + what, start);
            throw FormatError(std::string("expected ") + what, start);
        }
        return v;
    }

private:
    std::istream& is_;
    std::size_t offset_ = 0;
    std::size_t token_start_ = 0;
};

} // namespace

Raster read(std::istream& is)
{
    Scanner s(is);
    if (s.get() != 'P')
        throw FormatError("not a Netpbm file (missing 'P' magic)", 0);
    const int kind = s.get();
    bool ascii = false;
    Raster r;
    switch (kind) {
    case '2': ascii = true; r.channels = 1; break;
    case '3': ascii = true; r.channels = 3; break;
    case '5': r.channels = 1; break;
    case '6': r.channels = 3; break;
    default: throw FormatError("unsupported Netpbm magic", 1);
    }

    const long w = s.number("width");
    const std::size_t width_at = s.token_start();
    const long h = s.number("height");
    const long mv = s.number("maxval");
    const std::size_t maxval_at = s.token_start();
    if (w < 1 || h < 1 || w > 1 << 16 || h > 1 << 16)
        throw FormatError("image dimensions out of range", width_at);
    if (mv < 1 || mv > 65535)
        throw FormatError("unsupported maxval " + std::to_string(mv), maxval_at);
    r.width = static_cast<int>(w);
    r.height = static_cast<int>(h);
    r.maxval = static_cast<int>(mv);

    const std::size_t count = static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * r.channels;
    r.samples.resize(count);

    if (ascii) {
        for (std::size_t i = 0; i < count; ++i) {
            const long v = s.number("sample");
            if (v > mv)
                throw FormatError("sample exceeds maxval", s.token_start());
            r.samples[i] = static_cast<std::uint16_t>(v);
        }
        return r;
    }

    // Exactly one whitespace byte separates the header from binary data.
    const int sep = s.get();
    if (sep == std::char_traits<char>::eof() || !std::isspace(sep))
        throw FormatError("missing whitespace after maxval", s.offset());
    const bool wide = mv > 255;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t at = s.offset();
        int v = s.get();
        if (v == std::char_traits<char>::eof())
            throw FormatError("truncated pixel data", at);
        if (wide) {
            const int lo = s.get();
            if (lo == std::char_traits<char>::eof())
                throw FormatError("truncated pixel data", at);
            v = (v << 8) | lo;
        }
        if (v > mv)
            throw FormatError("sample exceeds maxval", at);
        r.samples[i] = static_cast<std::uint16_t>(v);
    }
    return r;
}

Raster load(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw IoError("cannot open '" + path + "'");
    return read(is);
}

void write(std::ostream& os, const Raster& r, bool ascii)
{
    if (r.channels != 1 && r.channels != 3)
        throw ArgumentError("Netpbm output needs 1 or 3 channels");
    if (r.maxval < 1 || r.maxval > 65535)
        throw ArgumentError("maxval must lie in [1, 65535]");
    const std::size_t count = static_cast<std::size_t>(r.width) * r.height * r.channels;
    if (r.samples.size() != count)
        throw ArgumentError("raster sample count does not match its dimensions");

    const char magic = r.channels == 1 ? (ascii ? '2' : '5') : (ascii ? '3' : '6');
    os << 'P' << magic << '\n' << r.width << ' ' << r.height << '\n' << r.maxval << '\n';
    if (ascii) {
        const std::size_t per_row = static_cast<std::size_t>(r.width) * r.channels;
        for (std::size_t i = 0; i < count; ++i)
            os << r.samples[i] << ((i + 1) % per_row == 0 ? '\n' : ' ');
        return;
    }
    const bool wide = r.maxval > 255;
    for (std::uint16_t v : r.samples) {
        if (wide)
            os.put(static_cast<char>(v >> 8));
        os.put(static_cast<char>(v & 0xff));
    }
}

void save(const std::string& path, const Raster& raster, bool ascii)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw IoError("cannot open '" + path + "' for writing");
    write(os, raster, ascii);
    if (!os)
        throw IoError("write to '" + path + "' failed");
}

} // namespace glp::netpbm
