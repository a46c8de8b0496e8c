#pragma once

// The dihedral group D_n acting on mass vectors (relabelling) and on the
// fundamental domain of angles (relabel + rotate/reflect so theta_n = 2pi).

#include <span>
#include <string>
#include <vector>

#include "cocirc/types.hpp"

namespace cocirc {

/// The element P^h S^l; S is applied first.
///
/// On masses P shifts left cyclically, (m1..mn) -> (m2..mn, m1), and S
/// reverses the first n-1 entries, (m1..mn) -> (m_{n-1}..m1, mn).
struct DihedralElement {
    int n = 2;
    int h = 0;  // rotation power, 0 <= h < n
    int l = 0;  // reflection flag, 0 or 1

    static DihedralElement identity(int n) { return {n, 0, 0}; }
    static DihedralElement rotation(int n, int h);
    static DihedralElement reflection(int n) { return {n, 0, 1}; }

    bool is_identity() const noexcept { return h == 0 && l == 0; }

    /// "P^h S^l"
    std::string key() const;

    friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

/// All 2n elements, identity first, ordered by (l, h).
std::vector<DihedralElement> enumerate_group(int n);

DihedralElement compose(const DihedralElement& g1, const DihedralElement& g2);
DihedralElement inverse(const DihedralElement& g);

/// Index of the source entry that lands at position k (0-based): (g x)_k = x_{source(k)}.
std::size_t source_index(const DihedralElement& g, std::size_t k);

/// Applies the mass permutation of g to an arbitrary vector.
std::vector<double> permute(const DihedralElement& g, std::span<const double> x);

MassVector act_on_masses(const DihedralElement& g, const MassVector& m);

/// Requires theta in the fundamental domain; the result is too.
AngleConfig act_on_angles(const DihedralElement& g, const AngleConfig& theta);

}  // namespace cocirc
