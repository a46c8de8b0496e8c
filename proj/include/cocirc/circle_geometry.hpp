#pragma once

// Chords of the unit circle and the alternating chord sums of cyclic polygons.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cocirc/types.hpp"

namespace cocirc {

/// Sorted, distinct vertex indices into an AngleConfig.
using VertexSelection = std::vector<std::size_t>;

/// Row-major symmetric matrix with zero diagonal.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) {
        data_[i * n_ + j] = v;
        data_[j * n_ + i] = v;
    }

private:
    std::size_t n_;
    std::vector<double> data_;
};

/// 2|sin((a - b)/2)|. Throws DegenerateGeometry for coincident angles.
double chord_distance(double theta_i, double theta_j);

SymmetricMatrix chord_matrix(const AngleConfig& theta);

/// 1/r13^a + 1/r24^a - 1/r23^a - 1/r14^a for the four selected vertices.
/// Negative on every cyclic quadrilateral.
double quad_S(const AngleConfig& theta, const VertexSelection& sel, Alpha alpha);

/// Same-parity chords minus opposite-parity chords, parity taken by position
/// within the selection. Requires an even selection of at least 4 vertices.
double poly_R(const AngleConfig& theta, const VertexSelection& sel, Alpha alpha);

struct RDecomposition {
    double sub_R = 0.0;               // R of the selection without its first two vertices
    std::vector<double> quad_terms;   // S(i1, i2, i_{2j-1}, i_{2j}), j = 2..k
    double correction = 0.0;          // -1/r_{i1 i2}^alpha
    double residual = 0.0;            // |R - (sub_R + sum quads + correction)|
    double relative_residual = 0.0;   // residual / largest single chord term
};

/// Peels the first two vertices off a 2k-gon (2k >= 6).
RDecomposition decompose_R(const AngleConfig& theta, const VertexSelection& sel, Alpha alpha);

/// |ef - (ac + bd)| / ef for the quadrilateral on the four selected vertices.
double ptolemy_residual(const AngleConfig& theta, const VertexSelection& sel);

/// k sorted angles in (0, 2pi] with every cyclic gap >= kSampleMinGap.
AngleConfig sample_cyclic_polygon(std::size_t k, std::uint64_t seed);

inline constexpr double kSampleMinGap = 1e-3;

/// cos(x) / sin(x)^(alpha+1); strictly decreasing on (0, pi).
double cot_power(double x, Alpha alpha);

}  // namespace cocirc
