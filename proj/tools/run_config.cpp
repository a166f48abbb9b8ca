#include "run_config.hpp"

#include "glp/numfmt.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace glp::cli {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream ss(s);
    std::vector<std::string> out;
    for (std::string t; ss >> t;)
        out.push_back(t);
    return out;
}

template <class T>
T parse_integer(const std::string& key, const std::string& s)
{
    T v{};
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ConfigError("config key '" + key + "': not an integer: '" + s + "'");
    return v;
}

double parse_real(const std::string& key, const std::string& s)
{
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0')
        throw ConfigError("config key '" + key + "': not a number: '" + s + "'");
    return v;
}

bool parse_bool(const std::string& key, const std::string& s)
{
    if (s == "true")
        return true;
    if (s == "false")
        return false;
    throw ConfigError("config key '" + key + "': expected true or false, got '" + s + "'");
}

std::string join_reals(const std::vector<double>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + format_g17(v[i]);
    return out;
}

template <class T>
std::string join(const std::vector<T>& v)
{
    std::ostringstream ss;
    for (std::size_t i = 0; i < v.size(); ++i)
        ss << (i ? " " : "") << v[i];
    return ss.str();
}

void set_key(RunConfig& c, const std::string& key, const std::string& value)
{
    const auto items = split_ws(value);
    auto single = [&]() -> std::string {
        if (items.size() > 1)
            throw ConfigError("config key '" + key + "' takes one value");
        return items.empty() ? std::string{} : items[0];
    };
    auto reals = [&] {
        std::vector<double> v;
        for (const auto& s : items)
            v.push_back(parse_real(key, s));
        return v;
    };
    auto ints = [&] {
        std::vector<int> v;
        for (const auto& s : items)
            v.push_back(parse_integer<int>(key, s));
        return v;
    };

    if (key == "command") c.command = single();
    else if (key == "interval") c.interval = reals();
    else if (key == "rect") c.rect = reals();
    else if (key == "degrees") c.degrees = items;
    else if (key == "m") c.m = ints();
    else if (key == "points") c.points = parse_integer<int>(key, single());
    else if (key == "grid") c.grid = parse_integer<int>(key, single());
    else if (key == "quad_order") c.quad_order = parse_integer<int>(key, single());
    else if (key == "domain") c.domain = single();
    else if (key == "moments") c.moments = single();
    else if (key == "input") c.input = single();
    else if (key == "output") c.output = single();
    else if (key == "coeffs") c.coeffs = single();
    else if (key == "clamp") c.clamp = parse_bool(key, single());
    else if (key == "ascii") c.ascii = parse_bool(key, single());
    else if (key == "width") c.width = parse_integer<int>(key, single());
    else if (key == "height") c.height = parse_integer<int>(key, single());
    else if (key == "maxval") c.maxval = parse_integer<int>(key, single());
    else if (key == "sweep") c.sweep = ints();
    else if (key == "kmax") c.kmax = parse_integer<int>(key, single());
    else if (key == "max_degree") c.max_degree = parse_integer<int>(key, single());
    else if (key == "seed") c.seed = parse_integer<std::uint64_t>(key, single());
    else if (key == "tolerance") {
        const std::string s = single();
        c.tolerance = s.empty() ? std::nullopt : std::optional<double>(parse_real(key, s));
    } else if (key == "format") c.format = single();
    else throw ConfigError("unknown config key '" + key + "'");
}

} // namespace

std::string serialize(const RunConfig& c)
{
    std::ostringstream os;
    auto line = [&](const char* key, const std::string& value) {
        os << key << " =";
        if (!value.empty())
            os << ' ' << value;
        os << '\n';
    };
    line("command", c.command);
    line("interval", join_reals(c.interval));
    line("rect", join_reals(c.rect));
    line("degrees", join(c.degrees));
    line("m", join(c.m));
    line("points", std::to_string(c.points));
    line("grid", std::to_string(c.grid));
    line("quad_order", std::to_string(c.quad_order));
    line("domain", c.domain);
    line("moments", c.moments);
    line("input", c.input);
    line("output", c.output);
    line("coeffs", c.coeffs);
    line("clamp", c.clamp ? "true" : "false");
    line("ascii", c.ascii ? "true" : "false");
    line("width", std::to_string(c.width));
    line("height", std::to_string(c.height));
    line("maxval", std::to_string(c.maxval));
    line("sweep", join(c.sweep));
    line("kmax", std::to_string(c.kmax));
    line("max_degree", std::to_string(c.max_degree));
    line("seed", std::to_string(c.seed));
    line("tolerance", c.tolerance ? format_g17(*c.tolerance) : std::string{});
    line("format", c.format);
    return os.str();
}

void apply_config(RunConfig& config, const std::string& text)
{
    std::istringstream is(text);
    int lineno = 0;
    for (std::string raw; std::getline(is, raw);) {
        ++lineno;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
        set_key(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

RunConfig parse_config(const std::string& text)
{
    RunConfig c;
    apply_config(c, text);
    return c;
}

std::vector<int> expand_degrees(const std::vector<std::string>& tokens)
{
    std::vector<int> out;
    for (const auto& token : tokens) {
        std::istringstream parts(token);
        for (std::string part; std::getline(parts, part, ',');) {
            if (part.empty())
                continue;
            const auto dots = part.find("..");
            if (dots == std::string::npos) {
                out.push_back(parse_integer<int>("degrees", part));
                continue;
            }
            const int lo = parse_integer<int>("degrees", part.substr(0, dots));
            const int hi = parse_integer<int>("degrees", part.substr(dots + 2));
            if (hi < lo)
                throw ConfigError("degree range '" + part + "' is empty");
            for (int n = lo; n <= hi; ++n)
                out.push_back(n);
        }
    }
    return out;
}

} // namespace glp::cli
