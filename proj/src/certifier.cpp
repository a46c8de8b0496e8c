#include "cocirc/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cocirc {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::excluded: return "excluded";
        case Verdict::not_excluded: return "not_excluded";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

double CertificateReport::value_for(const DihedralElement& g) const {
    for (const auto& cv : criterion_values)
        if (cv.element == g) return cv.value;
    throw InvalidArgument("group element " + g.key() + " not present in report");
}

namespace {

std::vector<double> difference(const DihedralElement& g, const MassVector& m) {
    std::vector<double> v = permute(g, m.values());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= m[i];
    return v;
}

std::vector<CriterionValue> scan_with(const InteractionMatrix& h, const MassVector& m) {
    std::vector<CriterionValue> out;
    for (const auto& g : enumerate_group(static_cast<int>(m.size()))) {
        out.push_back({g, g.is_identity() ? 0.0 : quadratic_form(h, difference(g, m))});
    }
    return out;
}

}  // namespace

std::vector<CriterionValue> wang_scan(const MassVector& m, const AngleConfig& theta_m, Alpha alpha) {
    if (m.size() != theta_m.size()) throw InvalidArgument("mass vector and angles differ in length");
    if (!theta_m.in_fundamental_domain()) throw InvalidArgument("wang_scan needs theta_n = 2pi");
    return scan_with(interaction_matrix(theta_m, alpha), m);
}

double moment_residual(const MassVector& m, const AngleConfig& theta, Alpha alpha) {
    const std::vector<double> g = grad_mass(m, theta, alpha);
    const double mean = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
    double worst = 0.0;
    for (double x : g) worst = std::max(worst, std::abs(x - mean));
    return worst;
}

double certification_margin(const InteractionMatrix& h, const MassVector& m) {
    double vmax = 0.0;
    for (const auto& g : enumerate_group(static_cast<int>(m.size())))
        for (double x : difference(g, m)) vmax = std::max(vmax, std::abs(x));
    const double n = static_cast<double>(m.size());
    return 1e-9 * h.max_entry() * vmax * vmax * n * n;
}

CertificateReport certify(const MassVector& m, Alpha alpha, const MinimizerOptions& opts) {
    MinimizerResult mr = find_minimizer(m, alpha, opts);
    const InteractionMatrix h = interaction_matrix(mr.theta_m, alpha);

    CertificateReport rep{m, alpha.value(), mr.theta_m, scan_with(h, m), std::nullopt};
    rep.margin = certification_margin(h, m);
    rep.moment_residual = moment_residual(m, mr.theta_m, alpha);
    rep.grad_norm = mr.grad_norm;
    rep.iterations = mr.iterations;

    const auto lowest = std::min_element(rep.criterion_values.begin(), rep.criterion_values.end(),
                                         [](const auto& a, const auto& b) { return a.value < b.value; });
    rep.min_value = lowest->value;

    if (!mr.converged) {
        rep.verdict = Verdict::inconclusive;
    } else if (rep.min_value < -rep.margin) {
        rep.verdict = Verdict::excluded;
        rep.witness = lowest->element;
    } else {
        rep.verdict = Verdict::not_excluded;
    }
    return rep;
}

}  // namespace cocirc
