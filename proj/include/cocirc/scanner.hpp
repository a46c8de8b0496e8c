#pragma once

// Arrangements of special masses on the circle, up to dihedral symmetry,
// and batch certification of whole mass families.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cocirc/certifier.hpp"

namespace cocirc {

/// Lexicographically largest word among all rotations and reversals of `word`.
std::string canonical_form(const std::string& word);

/// Same canonicalization for labelled words (e.g. mass vectors).
std::vector<double> canonical_form(const std::vector<double>& word);

struct ArrangementPattern {
    std::size_t n_total = 0;
    std::vector<std::size_t> special_positions;  // 0-based, sorted
    std::string canonical_form;                  // '1' at special positions
    bool antipodal = false;                      // exactly two specials half a turn apart

    static ArrangementPattern from_word(const std::string& word);
};

/// One representative per dihedral orbit of 2-subsets, i.e. one per gap 1..n/2.
std::vector<ArrangementPattern> enumerate_two_unequal(std::size_t n_total);

/// Binary bracelets of length n_total with k ones, sorted by canonical form (descending).
std::vector<ArrangementPattern> enumerate_two_groups(std::size_t n_total, std::size_t k);

/// Rotates the pattern so the special run ends at the last position, as in
/// the usual m_n normalization. Returns the rotated 0-based positions.
std::vector<std::size_t> place_pattern(const ArrangementPattern& pattern);

enum class FamilyKind { two_unequal, two_groups };

struct FamilySpec {
    FamilyKind kind = FamilyKind::two_groups;
    std::size_t n_total = 0;
    std::size_t k = 0;                          // group size, two_groups only
    std::pair<double, double> values{1.0, 1.0};  // (m_j, m_n) or (1, m)

    static FamilySpec two_unequal(std::size_t n_total, double m_j, double m_n);
    static FamilySpec two_groups(std::size_t n_total, std::size_t k, double m);

    void validate() const;
};

struct ArrangementReport {
    ArrangementPattern pattern;
    std::vector<std::size_t> positions;  // placed special positions, 0-based
    CertificateReport report;
};

struct ScanSummary {
    int excluded = 0;
    int not_excluded = 0;
    int inconclusive = 0;
};

struct ScanResult {
    FamilySpec spec;
    double alpha = 0.0;
    std::vector<ArrangementReport> rows;  // enumeration order
    ScanSummary summary;
};

struct ArrangementInput {
    ArrangementPattern pattern;
    std::vector<std::size_t> positions;
    MassVector masses;
};

/// Concrete, deduplicated mass vectors for every arrangement of the family.
std::vector<ArrangementInput> family_arrangements(const FamilySpec& spec);

/// Certifies every arrangement; OpenMP-parallel over arrangements.
ScanResult scan_family(const FamilySpec& spec, Alpha alpha, const MinimizerOptions& opts = {});

/// Single-threaded reference for scan_family.
ScanResult scan_family_serial(const FamilySpec& spec, Alpha alpha, const MinimizerOptions& opts = {});

}  // namespace cocirc
