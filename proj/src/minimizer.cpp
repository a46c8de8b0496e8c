#include "cocirc/minimizer.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>

#include "cocirc/potential.hpp"
#include "cocirc/rng.hpp"

namespace cocirc {

namespace {

bool feasible(const std::vector<double>& theta) {
    if (!(theta.front() > 0.0)) return false;
    for (std::size_t k = 0; k + 1 < theta.size(); ++k) {
        if (!(theta[k + 1] - theta[k] > kDegeneracyThreshold)) return false;
    }
    // wrap-around gap between body n (at 2pi) and body 1
    return theta.front() > kDegeneracyThreshold;
}

double max_abs(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

Eigen::VectorXd free_gradient(std::span<const double> m, const std::vector<double>& theta, double alpha) {
    const std::vector<double> g = grad_theta(m, theta, alpha);
    return Eigen::Map<const Eigen::VectorXd>(g.data(), static_cast<Eigen::Index>(g.size() - 1));
}

// Newton direction on the free block; shifts the Hessian until it is positive
// definite and falls back to steepest descent if that never happens.
Eigen::VectorXd search_direction(std::span<const double> m, const std::vector<double>& theta, double alpha,
                                 const Eigen::VectorXd& grad) {
    const auto n = static_cast<Eigen::Index>(theta.size());
    const std::vector<double> full = hessian_theta(m, theta, alpha);
    const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> h(full.data(), n,
                                                                                                       n);
    Eigen::MatrixXd block = h.topLeftCorner(n - 1, n - 1);

    const double diag_scale = std::max(block.diagonal().cwiseAbs().maxCoeff(), 1.0);
    double shift = 0.0;
    for (int attempt = 0; attempt < 12; ++attempt) {
        Eigen::MatrixXd shifted = block;
        shifted.diagonal().array() += shift;
        Eigen::LLT<Eigen::MatrixXd> llt(shifted);
        if (llt.info() == Eigen::Success) {
            Eigen::VectorXd d = llt.solve(-grad);
            if (d.allFinite() && d.dot(grad) < 0.0) return d;
        }
        shift = shift == 0.0 ? 1e-8 * diag_scale : shift * 10.0;
    }
    return -grad / diag_scale;
}

}  // namespace

void MinimizerOptions::validate() const {
    if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
    if (max_iterations < 1) throw InvalidArgument("max_iterations must be >= 1");
}

MinimizerResult find_minimizer(const MassVector& m, Alpha alpha, const MinimizerOptions& opts) {
    opts.validate();
    const std::size_t n = m.size();
    const double a = alpha.value();
    const std::span<const double> masses = m.values();

    std::vector<double> theta;
    if (opts.initial) {
        if (opts.initial->size() != n) throw InvalidArgument("initial angles have the wrong length");
        if (!opts.initial->in_fundamental_domain()) throw InvalidArgument("initial angles must end at 2pi");
        theta.assign(opts.initial->values().begin(), opts.initial->values().end());
    } else {
        const AngleConfig reg = AngleConfig::regular(n);
        theta.assign(reg.values().begin(), reg.values().end());
    }

    double u = u_alpha(masses, theta, a);
    Eigen::VectorXd grad = free_gradient(masses, theta, a);
    MinimizerResult result{AngleConfig(theta), 0, max_abs(grad), false, {u}};

    constexpr double kArmijo = 1e-4;
    constexpr double kUlp = std::numeric_limits<double>::epsilon();
    int it = 0;
    for (; it < opts.max_iterations && max_abs(grad) > opts.tolerance; ++it) {
        const Eigen::VectorXd dir = search_direction(masses, theta, a, grad);
        const double slope = dir.dot(grad);

        double step = 1.0;
        bool accepted = false;
        std::vector<double> trial(theta);
        while (step * max_abs(dir) > opts.min_step) {
            for (std::size_t k = 0; k + 1 < n; ++k) trial[k] = theta[k] + step * dir[static_cast<Eigen::Index>(k)];
            if (feasible(trial)) {
                const double u_trial = u_alpha(masses, trial, a);
                if (u_trial <= u + kArmijo * step * slope) {
                    accepted = true;
                } else if (std::abs(u_trial - u) <= 8.0 * kUlp * std::abs(u)) {
                    // Objective differences are rounding noise here; let the gradient decide.
                    accepted = max_abs(free_gradient(masses, trial, a)) < max_abs(grad);
                }
                if (accepted) {
                    u = u_trial;
                    break;
                }
            }
            step *= 0.5;
        }
        if (!accepted) break;

        theta.swap(trial);
        grad = free_gradient(masses, theta, a);
        result.objective_history.push_back(u);
    }

    result.theta_m = AngleConfig(theta);
    result.iterations = it;
    result.grad_norm = max_abs(grad);
    result.converged = result.grad_norm <= opts.tolerance;
    return result;
}

AngleConfig random_start(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const AngleConfig reg = AngleConfig::regular(n);
    const double gap = kTwoPi / static_cast<double>(n);
    std::vector<double> theta(reg.values().begin(), reg.values().end());
    for (std::size_t k = 0; k + 1 < n; ++k) theta[k] += 0.4 * gap * (2.0 * rng.uniform() - 1.0);
    std::sort(theta.begin(), theta.end() - 1);
    return AngleConfig(std::move(theta));
}

MultiStartResult multi_start_check(const MassVector& m, Alpha alpha, int n_starts, std::uint64_t seed,
                                   const MinimizerOptions& opts) {
    if (n_starts < 2) throw InvalidArgument("multi_start_check needs at least two starts");
    MultiStartResult out;
    std::vector<AngleConfig> solutions;
    for (int s = 0; s < n_starts; ++s) {
        MinimizerOptions run = opts;
        run.initial = random_start(m.size(), derive_seed(seed, static_cast<std::uint64_t>(s)));
        MinimizerResult r = find_minimizer(m, alpha, run);
        if (r.converged) {
            ++out.converged_runs;
            solutions.push_back(std::move(r.theta_m));
        } else {
            ++out.failed_runs;
        }
    }
    for (std::size_t i = 0; i < solutions.size(); ++i)
        for (std::size_t j = i + 1; j < solutions.size(); ++j)
            for (std::size_t k = 0; k < m.size(); ++k)
                out.max_deviation = std::max(out.max_deviation, std::abs(solutions[i][k] - solutions[j][k]));
    return out;
}

}  // namespace cocirc
