#include "cocirc/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cocirc/circle_geometry.hpp"
#include "cocirc/parallel.hpp"
#include "cocirc/rng.hpp"
#include "cocirc/types.hpp"

namespace cocirc {

void InequalityConfig::validate() const {
    if (samples < 1) throw InvalidArgument("samples must be >= 1");
    if (max_vertices < 4 || max_vertices % 2 != 0) throw InvalidArgument("max_vertices must be even and >= 4");
    if (alphas.empty()) throw InvalidArgument("need at least one alpha");
    for (double a : alphas) Alpha{a};
    if (monotonicity_grid < 2) throw InvalidArgument("monotonicity grid too small");
}

namespace {

// Per-polygon tallies, merged in sample order.
struct Tally {
    long long tested = 0;
    long long violations = 0;
    double worst = -std::numeric_limits<double>::infinity();

    void add_sign(double value, double margin) {
        ++tested;
        if (!(value < -margin)) ++violations;
        worst = std::max(worst, value);
    }
    void add_residual(double value, double tol) {
        ++tested;
        if (!(value <= tol)) ++violations;
        worst = std::max(worst, value);
    }
    void merge(const Tally& o) {
        tested += o.tested;
        violations += o.violations;
        worst = std::max(worst, o.worst);
    }
};

struct PolygonTallies {
    Tally quad, poly, decomp, ptolemy;
};

PolygonTallies check_polygon(const InequalityConfig& cfg, std::size_t vertices, std::uint64_t seed) {
    const AngleConfig theta = sample_cyclic_polygon(vertices, seed);
    VertexSelection all(vertices);
    std::iota(all.begin(), all.end(), std::size_t{0});

    PolygonTallies t;
    for (double a : cfg.alphas) {
        const Alpha alpha(a);
        t.poly.add_sign(poly_R(theta, all, alpha), cfg.sign_margin);
        if (vertices == 4) {
            t.quad.add_sign(quad_S(theta, all, alpha), cfg.sign_margin);
        } else {
            t.decomp.add_residual(decompose_R(theta, all, alpha).relative_residual, cfg.residual_tolerance);
        }
    }
    if (vertices == 4) t.ptolemy.add_residual(ptolemy_residual(theta, all), cfg.residual_tolerance);
    return t;
}

SuiteSummary summarize(const char* name, int vertices, const Tally& t) {
    return {name, vertices, t.tested, t.violations, t.tested ? t.worst : 0.0};
}

Tally check_monotone(const InequalityConfig& cfg) {
    Tally t;
    const int grid = cfg.monotonicity_grid;
    const double h = std::numbers::pi / static_cast<double>(grid + 1);
    for (double a : cfg.alphas) {
        const Alpha alpha(a);
        double prev = cot_power(h, alpha);
        for (int i = 2; i <= grid; ++i) {
            const double cur = cot_power(h * i, alpha);
            // record cur - prev; must be strictly negative
            ++t.tested;
            if (!(cur < prev)) ++t.violations;
            t.worst = std::max(t.worst, cur - prev);
            prev = cur;
        }
    }
    return t;
}

template <bool Parallel>
InequalityReport run(const InequalityConfig& cfg) {
    cfg.validate();
    InequalityReport report;
    for (int v = 4; v <= cfg.max_vertices; v += 2) {
        std::vector<PolygonTallies> per(static_cast<std::size_t>(cfg.samples));
        const auto vertices = static_cast<std::size_t>(v);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static) num_threads(thread_count())
            for (int i = 0; i < cfg.samples; ++i)
                per[static_cast<std::size_t>(i)] =
                    check_polygon(cfg, vertices, derive_seed(cfg.seed, vertices, static_cast<std::uint64_t>(i)));
        } else {
            for (int i = 0; i < cfg.samples; ++i)
                per[static_cast<std::size_t>(i)] =
                    check_polygon(cfg, vertices, derive_seed(cfg.seed, vertices, static_cast<std::uint64_t>(i)));
        }

        PolygonTallies total;
        for (const auto& p : per) {
            total.quad.merge(p.quad);
            total.poly.merge(p.poly);
            total.decomp.merge(p.decomp);
            total.ptolemy.merge(p.ptolemy);
        }
        if (v == 4) {
            report.suites.push_back(summarize("quad_S", v, total.quad));
            report.suites.push_back(summarize("ptolemy", v, total.ptolemy));
        }
        report.suites.push_back(summarize("poly_R", v, total.poly));
        if (v >= 6) report.suites.push_back(summarize("decompose_R", v, total.decomp));
    }
    report.suites.push_back(summarize("cot_power_monotone", 0, check_monotone(cfg)));
    for (const auto& s : report.suites) report.total_violations += s.violations;
    return report;
}

}  // namespace

InequalityReport run_inequalities(const InequalityConfig& cfg) { return run<true>(cfg); }

InequalityReport run_inequalities_serial(const InequalityConfig& cfg) { return run<false>(cfg); }

}  // namespace cocirc
