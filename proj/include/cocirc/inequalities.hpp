#pragma once

// Randomized sign and identity checks for the cyclic-polygon functionals.

#include <cstdint>
#include <string>
#include <vector>

namespace cocirc {

struct InequalityConfig {
    int samples = 1000;         // polygons drawn per vertex count
    std::uint64_t seed = 0;
    int max_vertices = 12;      // largest 2k tested; 4 means quadrilaterals only
    std::vector<double> alphas{0.25, 0.5, 1.0, 1.5, 2.0, 3.0};
    double sign_margin = 1e-6;       // S, R must be below -sign_margin
    double residual_tolerance = 1e-10;
    int monotonicity_grid = 10'000;  // interior points of (0, pi)

    void validate() const;
};

struct SuiteSummary {
    std::string name;     // quad_S, poly_R, decompose_R, ptolemy, cot_power_monotone
    int vertices = 0;     // polygon size (0 for the monotonicity suite)
    long long tested = 0;
    long long violations = 0;
    double worst = 0.0;   // largest S/R value, or largest residual

    friend bool operator==(const SuiteSummary&, const SuiteSummary&) = default;
};

struct InequalityReport {
    std::vector<SuiteSummary> suites;
    long long total_violations = 0;

    friend bool operator==(const InequalityReport&, const InequalityReport&) = default;
};

/// Polygon i of size 2k is drawn from derive_seed(seed, 2k, i), so results do
/// not depend on how samples are scheduled. OpenMP-parallel over samples.
InequalityReport run_inequalities(const InequalityConfig& cfg);

/// Single-threaded reference for run_inequalities.
InequalityReport run_inequalities_serial(const InequalityConfig& cfg);

}  // namespace cocirc
