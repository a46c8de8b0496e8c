#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cocirc/types.hpp"

namespace cocirc {

struct MinimizerOptions {
    double tolerance = 1e-11;   // on max |dU/dtheta_k| over the free angles
    int max_iterations = 10'000;
    double min_step = 1e-14;    // stop once accepted steps shrink below this (max-abs)
    std::optional<AngleConfig> initial;

    void validate() const;
};

struct MinimizerResult {
    AngleConfig theta_m;
    int iterations = 0;
    double grad_norm = 0.0;  // max-abs gradient over the free angles at theta_m
    bool converged = false;
    std::vector<double> objective_history;  // U after each accepted step, starting point first
};

/// Minimizes U over the fundamental domain (theta_n pinned at 2pi) by damped
/// Newton with a gradient-descent fallback and a halving line search that
/// never leaves the open ordered set. Non-convergence is reported, not thrown.
MinimizerResult find_minimizer(const MassVector& m, Alpha alpha, const MinimizerOptions& opts = {});

/// Regular n-gon with every free angle jittered by up to 40% of the regular gap.
AngleConfig random_start(std::size_t n, std::uint64_t seed);

struct MultiStartResult {
    double max_deviation = 0.0;  // max pairwise max-abs angle difference over converged runs
    int converged_runs = 0;
    int failed_runs = 0;
};

MultiStartResult multi_start_check(const MassVector& m, Alpha alpha, int n_starts, std::uint64_t seed,
                                   const MinimizerOptions& opts = {});

}  // namespace cocirc
