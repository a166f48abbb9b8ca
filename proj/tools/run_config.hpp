#ifndef GLP_TOOLS_RUN_CONFIG_HPP
#define GLP_TOOLS_RUN_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace glp::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything a run depends on besides its input files. Serializes to
/// `key = value` lines in a fixed key order; lists are space separated.
struct RunConfig {
    std::string command;
    std::vector<double> interval;
    std::vector<double> rect;
    std::vector<std::string> degrees;
    std::vector<int> m;
    int points = 401;
    int grid = 256;
    int quad_order = 0; ///< 0 picks max_degree + 1
    std::string domain = "unit";
    std::string moments = "cell"; ///< cell | midpoint
    std::string input;
    std::string output;
    std::string coeffs;
    bool clamp = false;
    bool ascii = false;
    int width = 0;
    int height = 0;
    int maxval = 255;
    std::vector<int> sweep;
    int kmax = 3;
    int max_degree = 40;
    std::uint64_t seed = 20240917;
    std::optional<double> tolerance;
    std::string format = "text";

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::string serialize(const RunConfig& config);

/// Defaults overridden by every key present in `text`.
RunConfig parse_config(const std::string& text);

/// Override `config` with the keys present in `text`.
void apply_config(RunConfig& config, const std::string& text);

/// Expands tokens such as "0..6", "2,5,9" or "8" into integers, in order.
std::vector<int> expand_degrees(const std::vector<std::string>& tokens);

} // namespace glp::cli

#endif // GLP_TOOLS_RUN_CONFIG_HPP
