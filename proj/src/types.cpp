#include "cocirc/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cocirc {

Alpha::Alpha(double value) : value_(value) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw InvalidArgument("alpha must be a positive finite number, got " + std::to_string(value));
}

MassVector::MassVector(std::vector<double> masses) : masses_(std::move(masses)) {
    if (masses_.size() < 2) throw InvalidArgument("need at least two masses");
    for (double m : masses_) {
        if (!(m > 0.0) || !std::isfinite(m))
            throw InvalidArgument("masses must be positive and finite, got " + format_vector(masses_));
    }
}

AngleConfig::AngleConfig(std::vector<double> angles) : angles_(std::move(angles)) {
    if (angles_.size() < 2) throw InvalidArgument("need at least two angles");
    if (!(angles_.front() > 0.0)) throw InvalidArgument("first angle must be positive");
    if (!(angles_.back() <= kTwoPi)) throw InvalidArgument("angles must lie in (0, 2pi]");
    for (std::size_t k = 0; k + 1 < angles_.size(); ++k) {
        if (!(angles_[k] < angles_[k + 1]))
            throw InvalidArgument("angles must be strictly increasing: " + format_vector(angles_));
    }
}

bool AngleConfig::in_fundamental_domain() const noexcept {
    return angles_.back() == kTwoPi;
}

AngleConfig AngleConfig::regular(std::size_t n) {
    std::vector<double> a(n);
    for (std::size_t k = 0; k + 1 < n; ++k) a[k] = kTwoPi * static_cast<double>(k + 1) / static_cast<double>(n);
    a[n - 1] = kTwoPi;
    return AngleConfig(std::move(a));
}

bool is_interior(std::span<const double> theta) noexcept {
    if (theta.size() < 2 || !(theta.front() > 0.0)) return false;
    for (std::size_t k = 0; k + 1 < theta.size(); ++k)
        if (!(theta[k] < theta[k + 1])) return false;
    return std::abs(theta.back() - kTwoPi) <= 1e-12;
}

std::string format_vector(std::span<const double> v) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace cocirc
