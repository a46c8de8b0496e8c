#include "cocirc/circle_geometry.hpp"

#include <algorithm>
#include <cmath>

#include "cocirc/rng.hpp"

namespace cocirc {

namespace {

void check_selection(const AngleConfig& theta, const VertexSelection& sel) {
    for (std::size_t p = 0; p < sel.size(); ++p) {
        if (sel[p] >= theta.size()) throw InvalidArgument("selection index out of range");
        if (p > 0 && !(sel[p - 1] < sel[p])) throw InvalidArgument("selection must be sorted and distinct");
    }
}

double inv_pow(const AngleConfig& theta, std::size_t i, std::size_t j, double alpha) {
    return std::pow(chord_distance(theta[i], theta[j]), -alpha);
}

}  // namespace

double chord_distance(double theta_i, double theta_j) {
    double d = std::fmod(std::abs(theta_i - theta_j), kTwoPi);
    if (std::min(d, kTwoPi - d) < kDegeneracyThreshold)
        throw DegenerateGeometry("coincident angles " + std::to_string(theta_i) + ", " + std::to_string(theta_j));
    return 2.0 * std::abs(std::sin(0.5 * (theta_i - theta_j)));
}

SymmetricMatrix chord_matrix(const AngleConfig& theta) {
    SymmetricMatrix r(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i)
        for (std::size_t j = i + 1; j < theta.size(); ++j) r.set(i, j, chord_distance(theta[i], theta[j]));
    return r;
}

double quad_S(const AngleConfig& theta, const VertexSelection& sel, Alpha alpha) {
    if (sel.size() != 4) throw InvalidArgument("quad_S needs exactly 4 vertices");
    check_selection(theta, sel);
    const double a = alpha.value();
    return inv_pow(theta, sel[0], sel[2], a) + inv_pow(theta, sel[1], sel[3], a) -
           inv_pow(theta, sel[1], sel[2], a) - inv_pow(theta, sel[0], sel[3], a);
}

double poly_R(const AngleConfig& theta, const VertexSelection& sel, Alpha alpha) {
    if (sel.size() < 4 || sel.size() % 2 != 0)
        throw InvalidArgument("poly_R needs an even selection of at least 4 vertices");
    check_selection(theta, sel);
    double same = 0.0, opposite = 0.0;
    for (std::size_t p = 0; p < sel.size(); ++p) {
        for (std::size_t s = p + 1; s < sel.size(); ++s) {
            const double t = inv_pow(theta, sel[p], sel[s], alpha.value());
            ((s - p) % 2 == 0 ? same : opposite) += t;
        }
    }
    return same - opposite;
}

RDecomposition decompose_R(const AngleConfig& theta, const VertexSelection& sel, Alpha alpha) {
    if (sel.size() < 6 || sel.size() % 2 != 0)
        throw InvalidArgument("decompose_R needs an even selection of at least 6 vertices");
    check_selection(theta, sel);

    RDecomposition out;
    out.sub_R = poly_R(theta, VertexSelection(sel.begin() + 2, sel.end()), alpha);
    for (std::size_t j = 2; j + 1 < sel.size(); j += 2)
        out.quad_terms.push_back(quad_S(theta, {sel[0], sel[1], sel[j], sel[j + 1]}, alpha));
    out.correction = -inv_pow(theta, sel[0], sel[1], alpha.value());

    double rebuilt = out.sub_R + out.correction;
    for (double q : out.quad_terms) rebuilt += q;
    out.residual = std::abs(poly_R(theta, sel, alpha) - rebuilt);

    double largest = 0.0;
    for (std::size_t p = 0; p < sel.size(); ++p)
        for (std::size_t s = p + 1; s < sel.size(); ++s)
            largest = std::max(largest, inv_pow(theta, sel[p], sel[s], alpha.value()));
    out.relative_residual = out.residual / largest;
    return out;
}

double ptolemy_residual(const AngleConfig& theta, const VertexSelection& sel) {
    if (sel.size() != 4) throw InvalidArgument("ptolemy_residual needs exactly 4 vertices");
    check_selection(theta, sel);
    auto r = [&](std::size_t p, std::size_t s) { return chord_distance(theta[sel[p]], theta[sel[s]]); };
    const double a = r(0, 1), b = r(1, 2), c = r(2, 3), d = r(3, 0);
    const double ef = r(0, 2) * r(1, 3);
    return std::abs(ef - (a * c + b * d)) / ef;
}

AngleConfig sample_cyclic_polygon(std::size_t k, std::uint64_t seed) {
    if (k < 3) throw InvalidArgument("sample_cyclic_polygon needs k >= 3");
    const double free = kTwoPi - static_cast<double>(k) * kSampleMinGap;
    if (!(free > 0.0)) throw InvalidArgument("too many vertices for the minimum gap");

    SplitMix64 rng(seed);
    // Uniform spacings: normalized exponentials give a flat Dirichlet draw.
    std::vector<double> gaps(k);
    double total = 0.0;
    for (auto& g : gaps) {
        g = -std::log1p(-rng.uniform());
        total += g;
    }
    for (auto& g : gaps) g = kSampleMinGap + free * g / total;

    // The last gap wraps from the final vertex back to the first.
    std::vector<double> angles(k);
    angles[0] = gaps[k - 1] * (0.5 + 0.5 * rng.uniform());
    for (std::size_t i = 1; i < k; ++i) angles[i] = angles[i - 1] + gaps[i - 1];
    if (angles[k - 1] > kTwoPi) angles[k - 1] = kTwoPi;
    return AngleConfig(std::move(angles));
}

double cot_power(double x, Alpha alpha) {
    return std::cos(x) / std::pow(std::sin(x), alpha.value() + 1.0);
}

}  // namespace cocirc
