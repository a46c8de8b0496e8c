#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "cocirc/circle_geometry.hpp"
#include "cocirc/dihedral.hpp"
#include "cocirc/rng.hpp"

using namespace cocirc;
using std::numbers::pi;

namespace {

using Matrix = std::vector<std::vector<double>>;

// The explicit permutation / affine matrices, built entry by entry.
Matrix mass_P(int n) {
    Matrix a(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) a[i][(i + 1) % n] = 1.0;
    return a;
}
Matrix mass_S(int n) {
    Matrix a(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n - 1; ++i) a[i][n - 2 - i] = 1.0;
    a[n - 1][n - 1] = 1.0;
    return a;
}
Matrix angle_P(int n) {
    Matrix a(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n - 1; ++i) {
        a[i][0] = -1.0;
        a[i][i + 1] += 1.0;
    }
    a[n - 1][n - 1] = 1.0;
    return a;
}
Matrix angle_S(int n) {
    Matrix a(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n - 1; ++i) {
        a[i][n - 2 - i] = -1.0;
        a[i][n - 1] = 1.0;
    }
    a[n - 1][n - 1] = 1.0;
    return a;
}
std::vector<double> mul(const Matrix& a, const std::vector<double>& x) {
    std::vector<double> y(x.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}
// P^h S^l x, matrices applied right to left
std::vector<double> apply_matrices(const Matrix& p, const Matrix& s, const DihedralElement& g, std::vector<double> x) {
    if (g.l) x = mul(s, x);
    for (int i = 0; i < g.h; ++i) x = mul(p, x);
    return x;
}

std::vector<double> generic(int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return v;
}

AngleConfig random_domain_point(std::size_t n, std::uint64_t seed) {
    if (n == 2) return AngleConfig({0.5 + 0.1 * static_cast<double>(seed % 20), 2 * pi});
    const auto raw = sample_cyclic_polygon(n, seed);
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = raw[i] + (2 * pi - raw[n - 1]);
    t[n - 1] = 2 * pi;
    return AngleConfig(t);
}

}  // namespace

TEST(EnumerateGroup, Sizes) {
    EXPECT_EQ(enumerate_group(2).size(), 4u);
    EXPECT_EQ(enumerate_group(3).size(), 6u);
    EXPECT_TRUE(enumerate_group(3).front().is_identity());
    EXPECT_THROW(enumerate_group(1), InvalidArgument);
}

TEST(EnumerateGroup, ElementsActDistinctly) {
    for (int n = 3; n <= 9; ++n) {
        std::set<std::vector<double>> images;
        const auto theta = random_domain_point(n, n);
        std::set<std::vector<double>> angle_images;
        for (const auto& g : enumerate_group(n)) {
            images.insert(permute(g, generic(n)));
            const auto t = act_on_angles(g, theta);
            angle_images.insert(std::vector<double>(t.values().begin(), t.values().end()));
        }
        EXPECT_EQ(images.size(), 2u * n);
        EXPECT_EQ(angle_images.size(), 2u * n);
    }
}

TEST(ActOnMasses, Generators) {
    const MassVector m({1, 2, 3, 4});
    EXPECT_EQ(act_on_masses(DihedralElement::rotation(4, 1), m), MassVector({2, 3, 4, 1}));
    EXPECT_EQ(act_on_masses(DihedralElement::reflection(4), m), MassVector({3, 2, 1, 4}));
    EXPECT_EQ(act_on_masses(DihedralElement{5, 2, 1}, MassVector({1, 2, 3, 4, 5})), MassVector({2, 1, 5, 4, 3}));
    EXPECT_THROW(act_on_masses(DihedralElement::reflection(3), m), InvalidArgument);
}

TEST(ActOnMasses, MatchesExplicitMatrices) {
    for (int n = 2; n <= 8; ++n)
        for (const auto& g : enumerate_group(n))
            EXPECT_EQ(permute(g, generic(n)), apply_matrices(mass_P(n), mass_S(n), g, generic(n))) << g.key();
}

TEST(ActOnAngles, Generators) {
    const auto square = AngleConfig::regular(4);
    const auto rotated = act_on_angles(DihedralElement::rotation(4, 1), square);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(rotated[i], square[i], 1e-15);

    const AngleConfig t({1.0, 2.0, 2 * pi});
    const auto p = act_on_angles(DihedralElement::rotation(3, 1), t);
    EXPECT_NEAR(p[0], 1.0, 1e-15);
    EXPECT_NEAR(p[1], 2 * pi - 1.0, 1e-15);
    EXPECT_EQ(p[2], 2 * pi);
    const auto s = act_on_angles(DihedralElement::reflection(3), t);
    EXPECT_NEAR(s[0], 2 * pi - 2.0, 1e-15);
    EXPECT_NEAR(s[1], 2 * pi - 1.0, 1e-15);
    EXPECT_EQ(s[2], 2 * pi);

    EXPECT_THROW(act_on_angles(DihedralElement::reflection(3), AngleConfig({1.0, 2.0, 3.0})), InvalidArgument);
}

TEST(ActOnAngles, MatchesExplicitMatrices) {
    for (int n = 2; n <= 8; ++n) {
        const auto theta = random_domain_point(n, 40 + n);
        const std::vector<double> x(theta.values().begin(), theta.values().end());
        for (const auto& g : enumerate_group(n)) {
            const auto expected = apply_matrices(angle_P(n), angle_S(n), g, x);
            const auto got = act_on_angles(g, theta);
            for (int i = 0; i < n; ++i) EXPECT_NEAR(got[i], expected[i], 1e-12) << g.key();
            EXPECT_EQ(got[n - 1], 2 * pi);
        }
    }
}

TEST(Compose, Relations) {
    const int n = 6;
    const auto s = DihedralElement::reflection(n);
    const auto p = DihedralElement::rotation(n, 1);
    EXPECT_TRUE(compose(s, s).is_identity());
    EXPECT_TRUE(compose(p, DihedralElement::rotation(n, n - 1)).is_identity());
    EXPECT_EQ(compose(s, p), compose(DihedralElement::rotation(n, n - 1), s));
    EXPECT_THROW(compose(s, DihedralElement::reflection(5)), InvalidArgument);

    SplitMix64 rng(1);
    std::vector<double> v(n);
    for (auto& x : v) x = rng.uniform();
    EXPECT_EQ(permute(compose(s, p), v), permute(s, permute(p, v)));
}

TEST(DihedralProperties, HomomorphismForBothActions) {
    for (int n = 2; n <= 9; ++n) {
        const auto theta = random_domain_point(n, 70 + n);
        SplitMix64 rng(n);
        std::vector<double> v(n);
        for (auto& x : v) x = rng.uniform();
        for (const auto& g1 : enumerate_group(n))
            for (const auto& g2 : enumerate_group(n)) {
                const auto g = compose(g1, g2);
                EXPECT_EQ(permute(g, v), permute(g1, permute(g2, v)));
                const auto direct = act_on_angles(g, theta);
                const auto chained = act_on_angles(g1, act_on_angles(g2, theta));
                for (int i = 0; i < n; ++i) EXPECT_NEAR(direct[i], chained[i], 1e-12);
            }
    }
}

TEST(DihedralProperties, InversesAndDomainPreservation) {
    for (int n = 2; n <= 9; ++n) {
        const auto theta = random_domain_point(n, n * 3);
        for (const auto& g : enumerate_group(n)) {
            EXPECT_TRUE(compose(g, inverse(g)).is_identity());
            EXPECT_TRUE(compose(inverse(g), g).is_identity());
            const auto t = act_on_angles(g, theta);  // constructor enforces strict ordering
            EXPECT_TRUE(t.in_fundamental_domain());
        }
    }
}

TEST(DihedralElement, Key) {
    EXPECT_EQ(DihedralElement::identity(4).key(), "P^0 S^0");
    EXPECT_EQ((DihedralElement{7, 3, 1}).key(), "P^3 S^1");
}
