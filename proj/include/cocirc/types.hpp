#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cocirc {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Angle pairs closer than this (mod 2*pi) are treated as collisions.
inline constexpr double kDegeneracyThreshold = 1e-9;

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DegenerateGeometry : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Positive exponent of the power-law potential.
class Alpha {
public:
    explicit Alpha(double value);
    double value() const noexcept { return value_; }

private:
    double value_;
};

/// Ordered positive masses; index k sits at angle k of the matching AngleConfig.
class MassVector {
public:
    explicit MassVector(std::vector<double> masses);

    std::size_t size() const noexcept { return masses_.size(); }
    double operator[](std::size_t i) const { return masses_[i]; }
    std::span<const double> values() const noexcept { return masses_; }

    friend bool operator==(const MassVector&, const MassVector&) = default;

private:
    std::vector<double> masses_;
};

/// Strictly increasing angles in (0, 2*pi].
///
/// Points of the fundamental domain additionally have the last angle pinned
/// to exactly 2*pi; see in_fundamental_domain().
class AngleConfig {
public:
    explicit AngleConfig(std::vector<double> angles);

    std::size_t size() const noexcept { return angles_.size(); }
    double operator[](std::size_t i) const { return angles_[i]; }
    std::span<const double> values() const noexcept { return angles_; }

    bool in_fundamental_domain() const noexcept;

    static AngleConfig regular(std::size_t n);

private:
    std::vector<double> angles_;
};

/// True iff strictly increasing, first angle positive, last angle 2*pi (within 1e-12).
bool is_interior(std::span<const double> theta) noexcept;

std::string format_vector(std::span<const double> v);

}  // namespace cocirc
