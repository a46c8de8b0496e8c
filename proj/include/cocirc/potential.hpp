#pragma once

// The power-law potential U = sum_{j<k} m_j m_k / r_jk^alpha on the unit circle.

#include <span>
#include <vector>

#include "cocirc/circle_geometry.hpp"
#include "cocirc/types.hpp"

namespace cocirc {

/// Symmetric, zero-diagonal matrix of inverse chord powers 1/r_ij^alpha.
class InteractionMatrix {
public:
    InteractionMatrix(SymmetricMatrix entries, Alpha alpha) : entries_(std::move(entries)), alpha_(alpha) {}

    std::size_t size() const noexcept { return entries_.size(); }
    double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    Alpha alpha() const noexcept { return alpha_; }

    double max_entry() const;

    /// H * v.
    std::vector<double> apply(std::span<const double> v) const;

private:
    SymmetricMatrix entries_;
    Alpha alpha_;
};

double u_alpha(const MassVector& m, const AngleConfig& theta, Alpha alpha);

/// dU/dtheta_k = -alpha sum_{j != k} m_j m_k sin(theta_k - theta_j) / r_jk^(alpha+2).
std::vector<double> grad_theta(const MassVector& m, const AngleConfig& theta, Alpha alpha);

/// Unpinned variant used by the minimizer; angles need not be validated.
std::vector<double> grad_theta(std::span<const double> m, std::span<const double> theta, double alpha);

/// Full n x n Hessian of U in theta (row-major). Rows sum to zero.
std::vector<double> hessian_theta(std::span<const double> m, std::span<const double> theta, double alpha);

double u_alpha(std::span<const double> m, std::span<const double> theta, double alpha);

/// dU/dm_k = sum_{j != k} m_j / r_jk^alpha, computed as H * m.
std::vector<double> grad_mass(const MassVector& m, const AngleConfig& theta, Alpha alpha);

InteractionMatrix interaction_matrix(const AngleConfig& theta, Alpha alpha);

/// v^T H v. With the zero diagonal this is 2 sum_{i<j} H_ij v_i v_j,
/// so u_alpha(m) == quadratic_form(H, m) / 2.
double quadratic_form(const InteractionMatrix& h, std::span<const double> v);

struct TaylorExpansion {
    double linear = 0.0;     // v . grad_mass(m)
    double quadratic = 0.0;  // quadratic_form(H, v) / 2
    double residual = 0.0;   // |U(m+v) - U(m) - linear - quadratic|
    double relative_residual = 0.0;
};

/// Second-order expansion of U in the masses; exact because U is quadratic in m.
TaylorExpansion taylor_expand_mass(const MassVector& m, std::span<const double> v, const AngleConfig& theta,
                                   Alpha alpha);

}  // namespace cocirc
