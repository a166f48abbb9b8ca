#ifndef GLP_VERIFY_HPP
#define GLP_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace glp {

/// Seeded doubles in [-1, 1). The bit stream of mt19937_64 is fixed by the
/// standard and the conversion is done here, so sequences match across platforms.
class SeededUniform {
public:
    explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}
    double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-52 - 1.0; }

private:
    std::mt19937_64 engine_;
};

struct VerifyOptions {
    double a = 3.0;
    double b = 7.0;
    int max_degree = 40;        ///< 1D Gram / projection checks
    int algebra_degree = 128;   ///< coefficient-space algebra checks
    int random_vectors = 100;
    std::uint64_t seed = 20240917;
    std::optional<double> tolerance_override;
};

struct CheckResult {
    std::string name;
    double defect;
    double tolerance;
    bool passed;
};

/// Orthonormality, recurrences, ladder consistency, su(1,1) algebra, ODE,
/// basis bound, continuity and projection checks.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

void write_verify_text(std::ostream& os, const std::vector<CheckResult>& results);
void write_verify_csv(std::ostream& os, const std::vector<CheckResult>& results);

} // namespace glp

#endif // GLP_VERIFY_HPP
