#ifndef ROGUE_SUITES_HPP
#define ROGUE_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rogue/verification.hpp"

namespace rogue {

/// Knobs shared by the verification suites; defaults are the documented
/// acceptance settings.
struct SuiteOptions {
    std::vector<int> orders;  // empty: the suite's default orders
    int precision = 256;
    std::uint64_t seed = 20240601;
    int grid = 41;
    double h = 1e-3;
    std::vector<double> eps{0.02, 0.01, 0.005};
    int points = 10;
    int samples = 50;
};

/// Suite names accepted by run_suite ("all" runs every one).
const std::vector<std::string>& suite_names();

/// Runs one named suite; each order contributes one or more records.
std::vector<CheckRecord> run_suite(const std::string& name, const SuiteOptions& options);

/// One deterministic parameter set with entries uniform in [-10, 10].
DeformationParams random_params(int order, std::uint64_t seed);

/// Pattern windows used by the taxonomy checks.
struct PatternCase {
    std::string name;
    SolutionConfig config;
    GridAxis x;
    GridAxis t;
    int expected_peaks = 0;
    PatternClass expected = PatternClass::Unclassified;
};

std::vector<PatternCase> pattern_cases();

}  // namespace rogue

#endif  // ROGUE_SUITES_HPP
