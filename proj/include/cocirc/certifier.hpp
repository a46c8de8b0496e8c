#pragma once

// Dihedral quadratic-form test for centered co-circular central configurations.
//
// At the minimizer theta_m, if H_m(gm - m) < 0 for some g in D_n then
// (m, theta_m) cannot be a centered co-circular central configuration.
// A nonnegative scan proves nothing.

#include <optional>
#include <string>
#include <vector>

#include "cocirc/dihedral.hpp"
#include "cocirc/minimizer.hpp"
#include "cocirc/potential.hpp"

namespace cocirc {

enum class Verdict { excluded, not_excluded, inconclusive };

std::string to_string(Verdict v);

struct CriterionValue {
    DihedralElement element;
    double value = 0.0;  // quadratic_form(H, gm - m)
};

struct CertificateReport {
    MassVector masses;
    double alpha = 0.0;
    AngleConfig theta_m;
    std::vector<CriterionValue> criterion_values;  // enumerate_group order
    std::optional<DihedralElement> witness;        // most negative value, when excluded
    double min_value = 0.0;
    double margin = 0.0;  // values below -margin count as strictly negative
    double moment_residual = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
    Verdict verdict = Verdict::inconclusive;

    /// Criterion value for g; throws if g is not in the report's group.
    double value_for(const DihedralElement& g) const;
};

/// H_m(gm - m) for every g in D_n, identity first (and exactly zero).
std::vector<CriterionValue> wang_scan(const MassVector& m, const AngleConfig& theta_m, Alpha alpha);

/// max_k |dU/dm_k - mean|; zero exactly when the moment condition holds.
double moment_residual(const MassVector& m, const AngleConfig& theta, Alpha alpha);

/// 1e-9 * max|H_ij| * (max over g, i of |(gm - m)_i|)^2 * n^2.
double certification_margin(const InteractionMatrix& h, const MassVector& m);

CertificateReport certify(const MassVector& m, Alpha alpha, const MinimizerOptions& opts = {});

}  // namespace cocirc
