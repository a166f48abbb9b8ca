#include "commands.hpp"

#include "glp/coeff_io.hpp"
#include "glp/errors.hpp"
#include "glp/gelfand.hpp"
#include "glp/image.hpp"
#include "glp/legendre.hpp"
#include "glp/numfmt.hpp"
#include "glp/tensor_basis.hpp"
#include "glp/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <memory>
#include <ostream>
#include <sstream>

namespace glp::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text sink: the configured file, or `fallback` for "" and "-".
class TextOutput {
public:
    TextOutput(const std::string& path, std::ostream& fallback) : os_(&fallback)
    {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_)
                throw IoError("cannot open '" + path + "' for writing");
            os_ = file_.get();
        }
    }
    ~TextOutput() = default;

    std::ostream& stream() { return *os_; }

    void finish()
    {
        os_->flush();
        if (!*os_)
            throw IoError("write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_;
};

std::string require_path(const std::string& value, const char* what)
{
    if (value.empty())
        throw UsageError(std::string("missing ") + what);
    return value;
}

RectDomain rect_from(const std::vector<double>& v)
{
    if (v.empty() || v.size() % 2 != 0)
        throw UsageError("--rect needs pairs a_i b_i");
    std::vector<Interval> axes;
    for (std::size_t i = 0; i < v.size(); i += 2)
        axes.emplace_back(v[i], v[i + 1]);
    return RectDomain(std::move(axes));
}

DomainPolicy policy_from(const RunConfig& c)
{
    if (c.domain == "unit")
        return DomainPolicy::unit();
    if (c.domain == "pixel")
        return DomainPolicy::pixel();
    if (c.domain == "explicit") {
        RectDomain r = rect_from(c.rect);
        if (r.dimension() != 2)
            throw UsageError("--domain explicit needs --rect a1 b1 a2 b2");
        return DomainPolicy::explicit_rect(std::move(r));
    }
    throw UsageError("unknown domain policy '" + c.domain + "' (unit, pixel, explicit)");
}

std::pair<int, int> degree_box(const RunConfig& c)
{
    const auto d = expand_degrees(c.degrees);
    if (d.size() == 1)
        return {d[0], d[0]};
    if (d.size() == 2)
        return {d[0], d[1]};
    throw UsageError("--degrees needs Nx [Ny]");
}

MomentRule moment_rule(const RunConfig& c)
{
    if (c.moments == "cell")
        return MomentRule::cell_integral;
    if (c.moments == "midpoint")
        return MomentRule::midpoint;
    throw UsageError("unknown moment rule '" + c.moments + "' (cell, midpoint)");
}

MomentSet moments_for(const RunConfig& c, const ImageBuffer& img)
{
    if (!c.coeffs.empty())
        return from_coeff_file(load_coeff_file(c.coeffs));
    if (c.degrees.empty())
        throw UsageError("need --coeffs or --degrees");
    const auto [nx, ny] = degree_box(c);
    return analyze_image(img, nx, ny, moment_rule(c));
}

int cmd_basis(const RunConfig& c, std::ostream& out)
{
    if (!c.rect.empty()) {
        const RectDomain domain = rect_from(c.rect);
        if (domain.dimension() != 2)
            throw UsageError("basis density plots need a 2D --rect");
        if (c.m.size() != 2)
            throw UsageError("--m needs two indices");
        if (c.grid < 2)
            throw UsageError("--grid must be at least 2");
        const BasisSpecND spec(domain, c.m);
        CoeffTensor unit(spec);
        unit.at(c.m) = 1.0;
        const TensorGrid grid{cell_centers(domain.axis(0), c.grid), cell_centers(domain.axis(1), c.grid)};
        // values come back with x slowest; the image wants rows of y.
        const std::vector<double> v = synthesize_nd(unit, grid);
        const auto g = static_cast<std::size_t>(c.grid);

        double peak = 0.0;
        for (double x : v)
            peak = std::max(peak, std::abs(x));

        const std::string prefix = require_path(c.output, "--out prefix for the density plot");
        {
            TextOutput csv(prefix + ".csv", out);
            csv.stream() << "x,y,W\n";
            for (std::size_t j = 0; j < g; ++j)
                for (std::size_t i = 0; i < g; ++i)
                    csv.stream() << format_g17(grid[0][i]) << ',' << format_g17(grid[1][j]) << ','
                                 << format_g17(v[i * g + j]) << '\n';
            csv.finish();
        }
        netpbm::Raster r;
        r.width = c.grid;
        r.height = c.grid;
        r.channels = 1;
        r.maxval = c.maxval;
        r.samples.resize(g * g);
        for (std::size_t j = 0; j < g; ++j)
            for (std::size_t i = 0; i < g; ++i) {
                const double u = peak > 0.0 ? 0.5 * (v[i * g + j] / peak + 1.0) : 0.5;
                r.samples[j * g + i] = static_cast<std::uint16_t>(std::lround(std::clamp(u, 0.0, 1.0) * c.maxval));
            }
        netpbm::save(prefix + ".pgm", r, c.ascii);
        return kOk;
    }

    if (c.interval.size() != 2)
        throw UsageError("basis needs --interval a b or --rect a1 b1 a2 b2");
    const Interval iv(c.interval[0], c.interval[1]);
    std::vector<int> degrees = c.degrees.empty() ? std::vector<int>{0} : expand_degrees(c.degrees);
    const int top = *std::max_element(degrees.begin(), degrees.end());
    if (*std::min_element(degrees.begin(), degrees.end()) < 0)
        throw UsageError("degrees must be non-negative");
    const EvalTable table(BasisSpec1D(iv, top), uniform_points(iv, c.points));
    TextOutput csv(c.output, out);
    table.write_csv(csv.stream(), degrees);
    csv.finish();
    return kOk;
}

int cmd_analyze(const RunConfig& c, std::ostream& out)
{
    const ImageBuffer img = load_image(require_path(c.input, "--input"), policy_from(c));
    const auto [nx, ny] = degree_box(c);
    const MomentSet m = analyze_image(img, nx, ny, moment_rule(c));
    TextOutput os(c.output, out);
    write_coeff_file(os.stream(), to_coeff_file(m, ImageMeta{img.width(), img.height(), img.maxval()}));
    os.finish();
    return kOk;
}

int cmd_synth(const RunConfig& c, std::ostream&)
{
    const CoeffFile file = load_coeff_file(require_path(c.coeffs, "--coeffs"));
    const MomentSet m = from_coeff_file(file);
    int width = c.width, height = c.height, maxval = c.maxval;
    if (file.image) {
        width = width > 0 ? width : file.image->width;
        height = height > 0 ? height : file.image->height;
        maxval = file.image->maxval;
    }
    if (width < 1 || height < 1)
        throw UsageError("synth needs --width and --height (not recorded in the coefficient file)");
    const ImageBuffer img = synthesize_image(m, width, height, c.clamp, maxval);
    save_image(require_path(c.output, "--out"), img, c.ascii);
    return kOk;
}

int cmd_residual(const RunConfig& c, std::ostream&)
{
    const ImageBuffer img = load_image(require_path(c.input, "--input"), policy_from(c));
    const MomentSet m = moments_for(c, img);
    save_image(require_path(c.output, "--out"), residual_image(img, m), c.ascii);
    return kOk;
}

int cmd_quality(const RunConfig& c, std::ostream& out)
{
    const ImageBuffer img = load_image(require_path(c.input, "--input"), policy_from(c));
    std::vector<QualityReport> rows;
    if (!c.sweep.empty()) {
        for (int n : c.sweep)
            rows.push_back(quality(img, analyze_image(img, n, n, moment_rule(c))));
    } else {
        rows.push_back(quality(img, moments_for(c, img)));
    }
    TextOutput os(c.output, out);
    os.stream() << quality_csv_header() << '\n';
    for (const auto& q : rows)
        os.stream() << quality_csv_row(q) << '\n';
    os.finish();
    return kOk;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out)
{
    CoeffFile file = [&] {
        if (!c.coeffs.empty())
            return load_coeff_file(c.coeffs);
        const ImageBuffer img = load_image(require_path(c.input, "--coeffs or --input"), policy_from(c));
        return to_coeff_file(moments_for(c, img));
    }();
    TextOutput os(c.output, out);
    if (file.spec.dimension() == 1 && file.blocks.size() == 1) {
        const CoeffTensor& t = file.blocks[0];
        const CoeffVector v(file.spec.axis_spec(0), std::vector<double>(t.data().begin(), t.data().end()));
        write_spectrum_csv(os.stream(), v, c.kmax);
    } else {
        const bool tagged = file.blocks.size() > 1;
        for (std::size_t b = 0; b < file.blocks.size(); ++b)
            write_spectrum_csv(os.stream(), file.blocks[b], c.kmax, tagged ? static_cast<int>(b) : -1, b == 0);
    }
    os.finish();
    return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out)
{
    VerifyOptions o;
    if (c.interval.size() == 2) {
        o.a = c.interval[0];
        o.b = c.interval[1];
    } else if (!c.interval.empty()) {
        throw UsageError("--interval needs a b");
    }
    o.max_degree = c.max_degree;
    o.seed = c.seed;
    o.tolerance_override = c.tolerance;
    const auto results = run_verification(o);
    TextOutput os(c.output, out);
    if (c.format == "csv")
        write_verify_csv(os.stream(), results);
    else if (c.format == "text")
        write_verify_text(os.stream(), results);
    else
        throw UsageError("--format must be text or csv");
    os.finish();
    return all_passed(results) ? kOk : kVerifyFailed;
}

std::string read_file(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw IoError("cannot open config '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(is), {});
}

} // namespace

int run_config(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    try {
        if (c.command == "basis") return cmd_basis(c, out);
        if (c.command == "analyze") return cmd_analyze(c, out);
        if (c.command == "synth") return cmd_synth(c, out);
        if (c.command == "residual") return cmd_residual(c, out);
        if (c.command == "quality") return cmd_quality(c, out);
        if (c.command == "spectrum") return cmd_spectrum(c, out);
        if (c.command == "verify") return cmd_verify(c, out);
        throw UsageError("unknown command '" + c.command + "'");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ArgumentError& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kUsage;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << '\n';
        return kFormat;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kFormat;
    } catch (const RangeError& e) {
        err << "numerical guard: " << e.what() << '\n';
        return kNumericalGuard;
    } catch (const DomainError& e) {
        err << "numerical guard: " << e.what() << '\n';
        return kNumericalGuard;
    } catch (const NumericalError& e) {
        err << "numerical guard: " << e.what() << '\n';
        return kNumericalGuard;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generalized Legendre polynomial bases, image moments and su(1,1) checks", "glp"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "glp 0.1.0");

    RunConfig cfg;
    std::string config_path, save_config_path;
    std::vector<std::string> tolerance_arg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "Read settings from a key = value file (overrides flags)");
        sub->add_option("--save-config", save_config_path, "Write the effective settings to a file");
        sub->add_option("--out,-o", cfg.output, "Output path ('-' for stdout)");
    };
    auto image_input = [&](CLI::App* sub) {
        sub->add_option("--input,-i", cfg.input, "PGM/PPM image");
        sub->add_option("--domain", cfg.domain, "unit | pixel | explicit")->capture_default_str();
        sub->add_option("--rect", cfg.rect, "Explicit domain a1 b1 a2 b2");
        sub->add_option("--moments", cfg.moments, "Pixel weighting: cell | midpoint")->capture_default_str();
    };

    auto* basis = app.add_subcommand("basis", "Sample basis functions (1D curves or 2D density plots)");
    common(basis);
    basis->add_option("--interval", cfg.interval, "a b")->expected(2);
    basis->add_option("--rect", cfg.rect, "a1 b1 a2 b2");
    basis->add_option("--degrees", cfg.degrees, "Degrees, e.g. 0..6 or 1,3,5");
    basis->add_option("--m", cfg.m, "Multi-index for 2D plots");
    basis->add_option("--points", cfg.points, "Points per 1D curve")->capture_default_str();
    basis->add_option("--grid", cfg.grid, "Density plot resolution")->capture_default_str();
    basis->add_option("--maxval", cfg.maxval, "PGM maxval")->capture_default_str();
    basis->add_flag("--ascii", cfg.ascii, "Write ASCII PGM");

    auto* analyze = app.add_subcommand("analyze", "Compute moment tensors of an image");
    common(analyze);
    image_input(analyze);
    analyze->add_option("--degrees", cfg.degrees, "Nx [Ny]");

    auto* synth = app.add_subcommand("synth", "Reconstruct an image from moments");
    common(synth);
    synth->add_option("--coeffs,-c", cfg.coeffs, "Moment file");
    synth->add_option("--width", cfg.width, "Output width");
    synth->add_option("--height", cfg.height, "Output height");
    synth->add_option("--maxval", cfg.maxval, "Output maxval when the file records none");
    synth->add_flag("--clamp", cfg.clamp, "Clip overshoot to [0, 1] instead of failing");
    synth->add_flag("--ascii", cfg.ascii, "Write ASCII PGM/PPM");

    auto* residual = app.add_subcommand("residual", "Detail image 0.5 + (image - reconstruction) / 2");
    common(residual);
    image_input(residual);
    residual->add_option("--coeffs,-c", cfg.coeffs, "Moment file");
    residual->add_option("--degrees", cfg.degrees, "Nx [Ny] when no moment file is given");
    residual->add_flag("--ascii", cfg.ascii, "Write ASCII PGM/PPM");

    auto* qual = app.add_subcommand("quality", "Reconstruction error, PSNR and Parseval ratio as CSV");
    common(qual);
    image_input(qual);
    qual->add_option("--coeffs,-c", cfg.coeffs, "Moment file");
    qual->add_option("--degrees", cfg.degrees, "Nx [Ny]");
    qual->add_option("--sweep", cfg.sweep, "Square degree boxes, one CSV row each");

    auto* spectrum = app.add_subcommand("spectrum", "Coefficients and seminorm contributions as CSV");
    common(spectrum);
    image_input(spectrum);
    spectrum->add_option("--coeffs,-c", cfg.coeffs, "Coefficient file");
    spectrum->add_option("--degrees", cfg.degrees, "Nx [Ny] when analyzing --input");
    spectrum->add_option("--kmax", cfg.kmax, "Highest seminorm order")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run the numerical invariant suite");
    common(verify);
    verify->add_option("--interval", cfg.interval, "a b")->expected(2);
    verify->add_option("--degree", cfg.max_degree, "Basis degree for Gram/projection checks")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
    verify->add_option("--tolerance", tolerance_arg, "Force every tolerance to this value")->expected(1);
    verify->add_option("--format", cfg.format, "text | csv")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    for (const auto* sub : app.get_subcommands())
        cfg.command = sub->get_name();

    try {
        if (!tolerance_arg.empty())
            cfg.tolerance = std::stod(tolerance_arg[0]);
        if (!config_path.empty())
            apply_config(cfg, read_file(config_path));
        if (!save_config_path.empty()) {
            std::ofstream os(save_config_path, std::ios::binary);
            if (!os)
                throw IoError("cannot open '" + save_config_path + "' for writing");
            os << serialize(cfg);
        }
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument&) {
        err << "usage error: --tolerance needs a number\n";
        return kUsage;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kFormat;
    }
    return run_config(cfg, out, err);
}

} // namespace glp::cli
