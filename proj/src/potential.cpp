#include "cocirc/potential.hpp"

#include <algorithm>
#include <cmath>

namespace cocirc {

namespace {

void check_sizes(std::size_t masses, std::size_t angles) {
    if (masses != angles)
        throw InvalidArgument("mass vector has " + std::to_string(masses) + " entries but angle config has " +
                              std::to_string(angles));
}

}  // namespace

double InteractionMatrix::max_entry() const {
    double best = 0.0;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) best = std::max(best, std::abs(entries_(i, j)));
    return best;
}

std::vector<double> InteractionMatrix::apply(std::span<const double> v) const {
    if (v.size() != size()) throw InvalidArgument("dimension mismatch in InteractionMatrix::apply");
    std::vector<double> out(size(), 0.0);
    for (std::size_t i = 0; i < size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < size(); ++j)
            if (j != i) acc += entries_(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

double u_alpha(std::span<const double> m, std::span<const double> theta, double alpha) {
    double u = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j)
        for (std::size_t k = j + 1; k < m.size(); ++k)
            u += m[j] * m[k] * std::pow(chord_distance(theta[j], theta[k]), -alpha);
    return u;
}

double u_alpha(const MassVector& m, const AngleConfig& theta, Alpha alpha) {
    check_sizes(m.size(), theta.size());
    return u_alpha(m.values(), theta.values(), alpha.value());
}

std::vector<double> grad_theta(std::span<const double> m, std::span<const double> theta, double alpha) {
    const std::size_t n = m.size();
    std::vector<double> g(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = k + 1; j < n; ++j) {
            const double d = theta[k] - theta[j];
            const double r = chord_distance(theta[k], theta[j]);
            const double t = -alpha * m[j] * m[k] * std::sin(d) * std::pow(r, -alpha - 2.0);
            g[k] += t;
            g[j] -= t;
        }
    }
    return g;
}

std::vector<double> grad_theta(const MassVector& m, const AngleConfig& theta, Alpha alpha) {
    check_sizes(m.size(), theta.size());
    return grad_theta(m.values(), theta.values(), alpha.value());
}

std::vector<double> hessian_theta(std::span<const double> m, std::span<const double> theta, double alpha) {
    const std::size_t n = m.size();
    std::vector<double> h(n * n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = k + 1; j < n; ++j) {
            const double d = theta[k] - theta[j];
            const double r = chord_distance(theta[k], theta[j]);
            const double s = std::sin(d);
            // second derivative of r(d)^-alpha in d
            const double f2 = -alpha * (std::cos(d) * std::pow(r, -alpha - 2.0) -
                                        (alpha + 2.0) * s * s * std::pow(r, -alpha - 4.0));
            const double w = m[j] * m[k] * f2;
            h[k * n + k] += w;
            h[j * n + j] += w;
            h[k * n + j] -= w;
            h[j * n + k] -= w;
        }
    }
    return h;
}

std::vector<double> grad_mass(const MassVector& m, const AngleConfig& theta, Alpha alpha) {
    check_sizes(m.size(), theta.size());
    return interaction_matrix(theta, alpha).apply(m.values());
}

InteractionMatrix interaction_matrix(const AngleConfig& theta, Alpha alpha) {
    SymmetricMatrix h(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i)
        for (std::size_t j = i + 1; j < theta.size(); ++j)
            h.set(i, j, std::pow(chord_distance(theta[i], theta[j]), -alpha.value()));
    return InteractionMatrix(std::move(h), alpha);
}

double quadratic_form(const InteractionMatrix& h, std::span<const double> v) {
    if (v.size() != h.size()) throw InvalidArgument("dimension mismatch in quadratic_form");
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) acc += h(i, j) * v[i] * v[j];
    return 2.0 * acc;
}

TaylorExpansion taylor_expand_mass(const MassVector& m, std::span<const double> v, const AngleConfig& theta,
                                   Alpha alpha) {
    check_sizes(m.size(), theta.size());
    check_sizes(v.size(), theta.size());
    std::vector<double> shifted(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        shifted[i] = m[i] + v[i];
        if (!(shifted[i] > 0.0)) throw InvalidArgument("perturbed mass vector has a nonpositive entry");
    }

    const InteractionMatrix h = interaction_matrix(theta, alpha);
    const std::vector<double> gm = h.apply(m.values());

    TaylorExpansion out;
    for (std::size_t i = 0; i < m.size(); ++i) out.linear += v[i] * gm[i];
    out.quadratic = 0.5 * quadratic_form(h, v);

    const double u0 = u_alpha(m, theta, alpha);
    const double u1 = u_alpha(MassVector(std::move(shifted)), theta, alpha);
    out.residual = std::abs(u1 - u0 - out.linear - out.quadratic);
    const double scale = std::max({std::abs(u0), std::abs(u1), std::abs(out.linear), std::abs(out.quadratic)});
    out.relative_residual = scale > 0.0 ? out.residual / scale : 0.0;
    return out;
}

}  // namespace cocirc
