#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "cocirc/circle_geometry.hpp"
#include "cocirc/rng.hpp"

using namespace cocirc;
using std::numbers::pi;

namespace {

const AngleConfig kSquare({pi / 2, pi, 3 * pi / 2, 2 * pi});
const double kAlphaGrid[] = {0.25, 0.5, 1.0, 1.5, 2.0, 3.0};

VertexSelection all_of(std::size_t n) {
    VertexSelection s(n);
    std::iota(s.begin(), s.end(), std::size_t{0});
    return s;
}

// Brute-force R straight from the definition, with 1-based parity.
double brute_R(const AngleConfig& t, const VertexSelection& sel, double a) {
    double r = 0.0;
    for (std::size_t p = 1; p <= sel.size(); ++p)
        for (std::size_t s = p + 1; s <= sel.size(); ++s) {
            const double chord = std::sqrt(2.0 - 2.0 * std::cos(t[sel[p - 1]] - t[sel[s - 1]]));
            r += (p % 2 == s % 2 ? 1.0 : -1.0) / std::pow(chord, a);
        }
    return r;
}

}  // namespace

TEST(ChordDistance, ClosedForms) {
    EXPECT_DOUBLE_EQ(chord_distance(0.0, pi), 2.0);
    EXPECT_NEAR(chord_distance(0.0, 2 * pi / 3), std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(chord_distance(0.3, 1.1), 2 * std::sin(0.4), 1e-15);
    EXPECT_NEAR(chord_distance(0.3, 1.1), 0.7788367, 1e-7);
}

TEST(ChordDistance, CoincidentAnglesAreDegenerate) {
    EXPECT_THROW(chord_distance(1.0, 1.0), DegenerateGeometry);
    EXPECT_THROW(chord_distance(1.0, 1.0 + 5e-10), DegenerateGeometry);
    EXPECT_THROW(chord_distance(0.0, 2 * pi), DegenerateGeometry);
    EXPECT_NO_THROW(chord_distance(1.0, 1.0 + 1e-8));
}

TEST(ChordMatrix, RegularSquare) {
    const auto r = chord_matrix(kSquare);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(r(i, i), 0.0);
        EXPECT_NEAR(r(i, (i + 1) % 4), std::sqrt(2.0), 1e-15);
        EXPECT_NEAR(r(i, (i + 2) % 4), 2.0, 1e-15);
    }
}

TEST(ChordMatrix, TwoBodies) {
    const auto r = chord_matrix(AngleConfig({pi, 2 * pi}));
    EXPECT_EQ(r(0, 0), 0.0);
    EXPECT_DOUBLE_EQ(r(0, 1), 2.0);
    EXPECT_DOUBLE_EQ(r(1, 0), 2.0);
}

TEST(ChordMatrix, MatchesPairwiseCallsAndIsSymmetric) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto t = sample_cyclic_polygon(6, seed);
        const auto r = chord_matrix(t);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) {
                EXPECT_EQ(r(i, j), r(j, i));
                if (i == j) continue;
                EXPECT_EQ(r(i, j), chord_distance(t[i], t[j]));
                EXPECT_GT(r(i, j), 0.0);
                EXPECT_LE(r(i, j), 2.0);
            }
    }
}

TEST(QuadS, RegularSquare) {
    EXPECT_NEAR(quad_S(kSquare, {0, 1, 2, 3}, Alpha(1.0)), 1 - std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(quad_S(kSquare, {0, 1, 2, 3}, Alpha(2.0)), -0.5, 1e-14);
}

TEST(QuadS, GenericQuadrilateralIsNegative) {
    const AngleConfig t({0.3, 1.2, 2.5, 5.0});
    const double s = quad_S(t, {0, 1, 2, 3}, Alpha(1.0));
    auto inv = [&](int i, int j) { return 1.0 / (2 * std::abs(std::sin((t[i] - t[j]) / 2))); };
    EXPECT_NEAR(s, inv(0, 2) + inv(1, 3) - inv(1, 2) - inv(0, 3), 1e-14);
    EXPECT_LT(s, 0.0);
}

TEST(QuadS, RejectsBadInput) {
    EXPECT_THROW(quad_S(kSquare, {0, 1, 2}, Alpha(1.0)), InvalidArgument);
    EXPECT_THROW(quad_S(kSquare, {0, 2, 1, 3}, Alpha(1.0)), InvalidArgument);
    EXPECT_THROW(Alpha(0.0), InvalidArgument);
    EXPECT_THROW(Alpha(-1.0), InvalidArgument);
}

TEST(PolyR, ClosedForms) {
    EXPECT_NEAR(poly_R(kSquare, all_of(4), Alpha(1.0)), 1 - 2 * std::sqrt(2.0), 1e-14);
    const auto hex = AngleConfig::regular(6);
    EXPECT_NEAR(poly_R(hex, all_of(6), Alpha(1.0)), 2 * std::sqrt(3.0) - 7.5, 1e-13);
}

TEST(PolyR, RandomOctagonMatchesDoubleSumAndIsNegative) {
    const auto t = sample_cyclic_polygon(8, 99);
    const double r = poly_R(t, all_of(8), Alpha(0.5));
    EXPECT_NEAR(r, brute_R(t, all_of(8), 0.5), 1e-12);
    EXPECT_LT(r, 0.0);
}

TEST(PolyR, ParityFollowsSelectionPosition) {
    // Selecting vertices 1,2,4,5 of a hexagon: parity is by place in the selection,
    // so the "diagonals" are (1,4) and (2,5) even though 1 and 4 differ in index parity.
    const auto hex = AngleConfig::regular(6);
    const VertexSelection sel{0, 1, 3, 4};
    EXPECT_NEAR(poly_R(hex, sel, Alpha(1.0)), brute_R(hex, sel, 1.0), 1e-14);
}

TEST(PolyR, RejectsOddOrSmallSelections) {
    const auto hex = AngleConfig::regular(6);
    EXPECT_THROW(poly_R(hex, {0, 1, 2}, Alpha(1.0)), InvalidArgument);
    EXPECT_THROW(poly_R(hex, {0, 1, 2, 3, 4}, Alpha(1.0)), InvalidArgument);
    EXPECT_THROW(poly_R(hex, {0, 1}, Alpha(1.0)), InvalidArgument);
    EXPECT_THROW(poly_R(hex, {0, 1, 2, 3}, Alpha(-1.0)), InvalidArgument);
}

TEST(DecomposeR, HexagonAndOctagon) {
    const auto hex = AngleConfig::regular(6);
    auto d = decompose_R(hex, all_of(6), Alpha(1.0));
    EXPECT_LE(d.residual, 1e-12);
    EXPECT_EQ(d.quad_terms.size(), 2u);
    EXPECT_NEAR(d.correction, -1.0, 1e-14);  // adjacent hexagon side has length 1

    d = decompose_R(hex, all_of(6), Alpha(2.0));
    double rebuilt = d.sub_R + d.correction;
    for (double q : d.quad_terms) rebuilt += q;
    EXPECT_NEAR(rebuilt, brute_R(hex, all_of(6), 2.0), 1e-12);

    const auto oct = sample_cyclic_polygon(8, 5);
    d = decompose_R(oct, all_of(8), Alpha(1.0));
    EXPECT_LE(d.relative_residual, 1e-12);
    EXPECT_EQ(d.quad_terms.size(), 3u);
}

TEST(DecomposeR, RejectsQuadrilaterals) {
    EXPECT_THROW(decompose_R(kSquare, all_of(4), Alpha(1.0)), InvalidArgument);
}

TEST(Ptolemy, HoldsOnCyclicQuadrilaterals) {
    EXPECT_NEAR(ptolemy_residual(kSquare, all_of(4)), 0.0, 1e-15);
    EXPECT_LE(ptolemy_residual(AngleConfig({0.5, 1.0, 2.0, 4.0}), all_of(4)), 1e-12);
    EXPECT_LE(ptolemy_residual(AngleConfig({0.1, 0.2, 3.0, 6.0}), all_of(4)), 1e-12);
}

TEST(SampleCyclicPolygon, DeterministicAndWellSeparated) {
    const auto a = sample_cyclic_polygon(4, 7);
    const auto b = sample_cyclic_polygon(4, 7);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(a[i], b[i]);

    for (std::size_t k : {6u, 100u}) {
        const auto t = sample_cyclic_polygon(k, k == 6 ? 1 : 3);
        ASSERT_EQ(t.size(), k);
        EXPECT_GT(t[0], 0.0);
        EXPECT_LE(t[k - 1], 2 * pi);
        for (std::size_t i = 0; i + 1 < k; ++i) EXPECT_GE(t[i + 1] - t[i], 1e-3 * (1 - 1e-12));
        EXPECT_GE(2 * pi - t[k - 1] + t[0], 1e-3 * (1 - 1e-12));
    }
    EXPECT_THROW(sample_cyclic_polygon(2, 0), InvalidArgument);
}

// Properties over the alpha grid.

TEST(CircleProperties, QuadSAndPolyRAreNegative) {
    for (std::size_t k = 2; k <= 6; ++k) {
        for (std::uint64_t s = 0; s < 200; ++s) {
            const auto t = sample_cyclic_polygon(2 * k, derive_seed(11, k, s));
            for (double a : kAlphaGrid) {
                EXPECT_LT(poly_R(t, all_of(2 * k), Alpha(a)), 0.0);
                if (k == 2) EXPECT_LT(quad_S(t, all_of(4), Alpha(a)), 0.0);
            }
        }
    }
}

TEST(CircleProperties, DecompositionAndPtolemyAreExact) {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto quad = sample_cyclic_polygon(4, derive_seed(12, 4, s));
        EXPECT_LE(ptolemy_residual(quad, all_of(4)), 1e-10);
        for (std::size_t k = 3; k <= 6; ++k) {
            const auto t = sample_cyclic_polygon(2 * k, derive_seed(12, k, s));
            for (double a : kAlphaGrid) EXPECT_LE(decompose_R(t, all_of(2 * k), Alpha(a)).relative_residual, 1e-10);
        }
    }
}

TEST(CircleProperties, QuadSExceedsPolyRByTheTwoOuterSides) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto t = sample_cyclic_polygon(7, s);
        SplitMix64 rng(s);
        VertexSelection sel;
        for (std::size_t i = 0; i < 7 && sel.size() < 4; ++i)
            if (rng.uniform() < 0.6 || 7 - i == 4 - sel.size()) sel.push_back(i);
        for (double a : kAlphaGrid) {
            const double side12 = std::pow(chord_distance(t[sel[0]], t[sel[1]]), -a);
            const double side34 = std::pow(chord_distance(t[sel[2]], t[sel[3]]), -a);
            const double lhs = quad_S(t, sel, Alpha(a));
            const double rhs = poly_R(t, sel, Alpha(a)) + side12 + side34;
            EXPECT_NEAR(lhs, rhs, 1e-12 * std::max({1.0, std::abs(lhs), side12, side34}));
        }
    }
}

TEST(CircleProperties, CotPowerIsDecreasing) {
    constexpr int grid = 5000;
    for (double a : kAlphaGrid) {
        double prev = cot_power(pi / (grid + 1), Alpha(a));
        for (int i = 2; i <= grid; ++i) {
            const double cur = cot_power(pi * i / (grid + 1), Alpha(a));
            ASSERT_LT(cur, prev) << "alpha " << a << " at grid point " << i;
            prev = cur;
        }
    }
}
