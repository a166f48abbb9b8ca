#include "commands.hpp"
#include "run_config.hpp"

#include "glp/netpbm.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace glp;
using namespace glp::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("glp_cli_" + std::to_string(counter_++)))
    {
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string operator/(const std::string& name) const { return (path_ / name).string(); }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

void write_gradient_pgm(const std::string& path, int w, int h)
{
    netpbm::Raster r{w, h, 1, 255, {}};
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            r.samples.push_back(static_cast<std::uint16_t>(std::lround(255.0 * (0.2 * x / (w - 1.0) + 0.6 * y / (h - 1.0)))));
    netpbm::save(path, r);
}

std::string slurp(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(is), {});
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("degree token expansion")
{
    CHECK(expand_degrees({"0..3"}) == std::vector<int>{0, 1, 2, 3});
    CHECK(expand_degrees({"1,3,5", "8"}) == std::vector<int>{1, 3, 5, 8});
    CHECK_THROWS_AS(expand_degrees({"3..1"}), ConfigError);
    CHECK_THROWS_AS(expand_degrees({"x"}), ConfigError);
}

TEST_CASE("config round trip")
{
    RunConfig c;
    c.command = "quality";
    c.interval = {3.0, 7.0};
    c.rect = {0.1, 0.7, -2.0, 1e-3};
    c.degrees = {"0..4", "7"};
    c.m = {5, 7};
    c.sweep = {4, 8, 16};
    c.clamp = true;
    c.seed = 18446744073709551615ULL;
    c.tolerance = 1.0 / 3.0;
    c.moments = "midpoint";
    CHECK(parse_config(serialize(c)) == c);
    CHECK(serialize(parse_config(serialize(c))) == serialize(c));

    RunConfig d;
    CHECK(parse_config(serialize(d)) == d);

    CHECK_THROWS_AS(parse_config("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("points = many\n"), ConfigError);
    CHECK(parse_config("# comment\n\npoints = 7\n").points == 7);
}

TEST_CASE("basis 1D curves")
{
    const Run r = run({"basis", "--interval", "3", "7", "--degrees", "0..2", "--points", "5"});
    CHECK(r.code == kOk);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "x,W0,W1,W2");
    int rows = 0;
    while (std::getline(is, line))
        ++rows;
    CHECK(rows == 5);
    CHECK(run({"basis", "--interval", "3", "7", "--degrees", "0..2", "--points", "5"}).out == r.out);
}

TEST_CASE("basis 2D density plot")
{
    TempDir dir;
    const Run r = run({"basis", "--rect", "3", "7", "3", "7", "--m", "3", "3", "--grid", "32", "-o", dir / "w33"});
    REQUIRE(r.code == kOk);
    const auto img = netpbm::load(dir / "w33.pgm");
    CHECK(img.width == 32);
    CHECK(img.height == 32);
    // odd in both directions: antisymmetric about the centre
    for (int y = 0; y < 32; ++y)
        for (int x = 0; x < 32; ++x) {
            const int a = img.samples[static_cast<std::size_t>(y * 32 + x)];
            const int b = img.samples[static_cast<std::size_t>((31 - y) * 32 + (31 - x))];
            CHECK(std::abs(a - b) <= 1);
        }
    std::istringstream csv(slurp(dir / "w33.csv"));
    std::string header;
    std::getline(csv, header);
    CHECK(header == "x,y,W");
}

TEST_CASE("analyze, synth, residual, quality and spectrum")
{
    TempDir dir;
    write_gradient_pgm(dir / "g.pgm", 64, 48);
    REQUIRE(run({"analyze", "-i", dir / "g.pgm", "--degrees", "8", "8", "-o", dir / "g.coef"}).code == kOk);
    REQUIRE(run({"synth", "-c", dir / "g.coef", "-o", dir / "g_syn.pgm"}).code == kOk);
    const auto syn = netpbm::load(dir / "g_syn.pgm");
    CHECK(syn.width == 64);
    CHECK(syn.height == 48);

    const Run q = run({"quality", "-i", dir / "g.pgm", "--coeffs", dir / "g.coef"});
    REQUIRE(q.code == kOk);
    std::istringstream qs(q.out);
    std::string header, row;
    std::getline(qs, header);
    std::getline(qs, row);
    CHECK(header == "width,height,Nx,Ny,l2_error,psnr_db,parseval_ratio");
    double l2 = 0.0, psnr = 0.0, ratio = 0.0;
    int w = 0, h = 0, nx = 0, ny = 0;
    REQUIRE(std::sscanf(row.c_str(), "%d,%d,%d,%d,%lf,%lf,%lf", &w, &h, &nx, &ny, &l2, &psnr, &ratio) == 7);
    CHECK(psnr >= 40.0);
    CHECK(ratio <= 1.0 + 1e-9);

    const Run sweep = run({"quality", "-i", dir / "g.pgm", "--sweep", "2", "4", "8"});
    CHECK(sweep.code == kOk);
    CHECK(std::count(sweep.out.begin(), sweep.out.end(), '\n') == 4);

    CHECK(run({"residual", "-i", dir / "g.pgm", "--degrees", "4", "-o", dir / "res.pgm"}).code == kOk);
    CHECK(netpbm::load(dir / "res.pgm").width == 64);

    const Run sp = run({"spectrum", "--coeffs", dir / "g.coef", "--kmax", "2"});
    CHECK(sp.code == kOk);
    CHECK(sp.out.rfind("m1,m2,coeff,p0_contrib,p1_contrib,p2_contrib\n", 0) == 0);
}

TEST_CASE("analyze output is deterministic")
{
    TempDir dir;
    write_gradient_pgm(dir / "g.pgm", 20, 20);
    const Run a = run({"analyze", "-i", dir / "g.pgm", "--degrees", "5"});
    const Run b = run({"analyze", "-i", dir / "g.pgm", "--degrees", "5"});
    CHECK(a.code == kOk);
    CHECK(a.out == b.out);
}

TEST_CASE("config files: save, reload, override")
{
    TempDir dir;
    const std::string cfg = dir / "run.cfg";
    const Run first = run({"basis", "--interval", "-1", "1", "--degrees", "0..3", "--points", "9", "--save-config", cfg});
    REQUIRE(first.code == kOk);
    CHECK(slurp(cfg).find("points = 9") != std::string::npos);
    // the file wins over flags
    const Run again = run({"basis", "--points", "3", "--config", cfg});
    CHECK(again.code == kOk);
    CHECK(again.out == first.out);

    std::ofstream(dir / "bad.cfg") << "colour = blue\n";
    CHECK(run({"basis", "--config", dir / "bad.cfg"}).code == kUsage);
}

TEST_CASE("verify")
{
    const Run a = run({"verify", "--seed", "7"});
    CHECK(a.code == kOk);
    CHECK(a.out.find("FAIL") == std::string::npos);
    CHECK(run({"verify", "--seed", "7"}).out == a.out);

    const Run csv = run({"verify", "--format", "csv", "--degree", "20"});
    CHECK(csv.code == kOk);
    CHECK(csv.out.rfind("check,max_defect,tolerance,result\n", 0) == 0);

    CHECK(run({"verify", "--tolerance", "0"}).code == kVerifyFailed);
}

TEST_CASE("exit codes")
{
    TempDir dir;
    CHECK(run({}).code == kUsage);
    CHECK(run({"frobnicate"}).code == kUsage);
    CHECK(run({"basis", "--interval", "7", "3"}).code == kUsage);
    CHECK(run({"basis", "--interval", "0", "1", "--degrees", "600"}).code == kUsage);
    CHECK(run({"verify", "--format", "xml"}).code == kUsage);

    CHECK(run({"analyze", "-i", dir / "missing.pgm", "--degrees", "3"}).code == kFormat);
    std::ofstream(dir / "bad.pgm") << "P5\n4 4\n255\nab";
    const Run bad = run({"analyze", "-i", dir / "bad.pgm", "--degrees", "3"});
    CHECK(bad.code == kFormat);
    CHECK(bad.err.find("at byte 13") != std::string::npos);

    write_gradient_pgm(dir / "small.pgm", 8, 8);
    CHECK(run({"analyze", "-i", dir / "small.pgm", "--degrees", "8"}).code == kUsage);

    // moments that overshoot the guard band
    std::ofstream(dir / "hot.coef") << "GLPCOEFF 1\ndimension 2\naxis 0 1 1\naxis 0 1 1\nimage 8 8 255\nblocks 1\nblock 0\n0.5\n0\n0.6\n0\nend\n";
    const Run hot = run({"synth", "-c", dir / "hot.coef", "-o", dir / "hot.pgm"});
    CHECK(hot.code == kNumericalGuard);
    CHECK(run({"synth", "-c", dir / "hot.coef", "-o", dir / "hot.pgm", "--clamp"}).code == kOk);
}

} // TEST_SUITE
