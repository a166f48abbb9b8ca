#include "glp/coeff_io.hpp"

#include "glp/errors.hpp"
#include "glp/numfmt.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace glp {

namespace {

constexpr const char* kMagic = "GLPCOEFF";
constexpr int kVersion = 1;

class LineReader {
public:
    explicit LineReader(std::istream& is) : is_(is) {}

    // Next non-empty line split into whitespace-separated tokens.
    std::vector<std::string> next(const char* expecting)
    {
        std::string line;
        while (true) {
            line_start_ = offset_;
            if (!std::getline(is_, line))
                throw FormatError(std::string("unexpected end of file, expecting ") + expecting, offset_);
            offset_ += line.size() + 1;
            std::istringstream ss(line);
            std::vector<std::string> tokens;
            for (std::string t; ss >> t;)
                tokens.push_back(t);
            if (!tokens.empty() && tokens[0][0] != '#')
                return tokens;
        }
    }

    std::size_t line_start() const noexcept { return line_start_; }

    [[noreturn]] void fail(const std::string& what) const { throw FormatError(what, line_start_); }

    double to_double(const std::string& s) const
    {
        // strtod accepts "inf"/"nan" and exponents across libstdc++ versions.
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            fail("not a number: '" + s + "'");
        return v;
    }

    long to_int(const std::string& s) const
    {
        long v = 0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size())
            fail("not an integer: '" + s + "'");
        return v;
    }

private:
    std::istream& is_;
    std::size_t offset_ = 0;
    std::size_t line_start_ = 0;
};

void expect_key(const LineReader& r, const std::vector<std::string>& t, const char* key, std::size_t count)
{
    if (t[0] != key)
        r.fail(std::string("expected '") + key + "', found '" + t[0] + "'");
    if (t.size() != count)
        r.fail(std::string("'") + key + "' line needs " + std::to_string(count - 1) + " fields");
}

} // namespace

void write_coeff_file(std::ostream& os, const CoeffFile& file)
{
    const BasisSpecND& spec = file.spec;
    os << kMagic << ' ' << kVersion << '\n';
    os << "dimension " << spec.dimension() << '\n';
    for (int i = 0; i < spec.dimension(); ++i) {
        const Interval& iv = spec.domain().axis(i);
        os << "axis " << format_g17(iv.a()) << ' ' << format_g17(iv.b()) << ' '
           << spec.max_degrees()[static_cast<std::size_t>(i)] << '\n';
    }
    if (file.image)
        os << "image " << file.image->width << ' ' << file.image->height << ' ' << file.image->maxval << '\n';
    os << "blocks " << file.blocks.size() << '\n';
    for (std::size_t b = 0; b < file.blocks.size(); ++b) {
        if (!(file.blocks[b].spec() == spec))
            throw ArgumentError("coefficient block " + std::to_string(b) + " has a different degree box");
        os << "block " << b << '\n';
        for (double v : file.blocks[b].data())
            os << format_g17(v) << '\n';
    }
    os << "end\n";
}

CoeffFile read_coeff_file(std::istream& is)
{
    LineReader r(is);
    auto t = r.next("header");
    expect_key(r, t, kMagic, 2);
    if (r.to_int(t[1]) != kVersion)
        r.fail("unsupported coefficient file version " + t[1]);

    t = r.next("dimension");
    expect_key(r, t, "dimension", 2);
    const long dim = r.to_int(t[1]);
    if (dim < 1 || dim > 16)
        r.fail("dimension out of range");

    std::vector<Interval> axes;
    std::vector<int> degrees;
    for (long i = 0; i < dim; ++i) {
        t = r.next("axis");
        expect_key(r, t, "axis", 4);
        try {
            axes.emplace_back(r.to_double(t[1]), r.to_double(t[2]));
        } catch (const ArgumentError& e) {
            r.fail(e.what());
        }
        const long n = r.to_int(t[3]);
        if (n < 0 || n > kDefaultDegreeCap)
            r.fail("axis degree out of range");
        degrees.push_back(static_cast<int>(n));
    }
    BasisSpecND spec(RectDomain(std::move(axes)), std::move(degrees));

    std::optional<ImageMeta> image;
    t = r.next("blocks");
    if (t[0] == "image") {
        expect_key(r, t, "image", 4);
        ImageMeta meta{static_cast<int>(r.to_int(t[1])), static_cast<int>(r.to_int(t[2])),
                       static_cast<int>(r.to_int(t[3]))};
        if (meta.width < 1 || meta.height < 1 || meta.maxval < 1 || meta.maxval > 65535)
            r.fail("invalid image metadata");
        image = meta;
        t = r.next("blocks");
    }
    expect_key(r, t, "blocks", 2);
    const long nblocks = r.to_int(t[1]);
    if (nblocks < 1 || nblocks > 64)
        r.fail("block count out of range");

    CoeffFile file{spec, {}, image};
    for (long b = 0; b < nblocks; ++b) {
        t = r.next("block");
        expect_key(r, t, "block", 2);
        if (r.to_int(t[1]) != b)
            r.fail("blocks out of order");
        std::vector<double> data;
        data.reserve(spec.size());
        for (std::size_t k = 0; k < spec.size(); ++k) {
            t = r.next("coefficient");
            if (t.size() != 1)
                r.fail("expected one coefficient per line");
            data.push_back(r.to_double(t[0]));
        }
        file.blocks.emplace_back(spec, std::move(data));
    }
    t = r.next("end");
    expect_key(r, t, "end", 1);
    return file;
}

void save_coeff_file(const std::string& path, const CoeffFile& file)
{
    std::ofstream os(path);
    if (!os)
        throw IoError("cannot open '" + path + "' for writing");
    write_coeff_file(os, file);
    if (!os)
        throw IoError("write to '" + path + "' failed");
}

CoeffFile load_coeff_file(const std::string& path)
{
    std::ifstream is(path);
    if (!is)
        throw IoError("cannot open '" + path + "'");
    return read_coeff_file(is);
}

} // namespace glp
