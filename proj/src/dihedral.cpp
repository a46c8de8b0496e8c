#include "cocirc/dihedral.hpp"

#include <cmath>

namespace cocirc {

namespace {

int mod(long long a, int n) {
    const long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

void check_dimension(const DihedralElement& g, std::size_t size) {
    if (static_cast<std::size_t>(g.n) != size)
        throw InvalidArgument("group element of D_" + std::to_string(g.n) + " applied to a vector of length " +
                              std::to_string(size));
}

}  // namespace

DihedralElement DihedralElement::rotation(int n, int h) {
    if (n < 2) throw InvalidArgument("D_n needs n >= 2");
    return {n, mod(h, n), 0};
}

std::string DihedralElement::key() const {
    return "P^" + std::to_string(h) + " S^" + std::to_string(l);
}

std::vector<DihedralElement> enumerate_group(int n) {
    if (n < 2) throw InvalidArgument("D_n needs n >= 2");
    std::vector<DihedralElement> out;
    out.reserve(2 * static_cast<std::size_t>(n));
    for (int l = 0; l < 2; ++l)
        for (int h = 0; h < n; ++h) out.push_back({n, h, l});
    return out;
}

DihedralElement compose(const DihedralElement& g1, const DihedralElement& g2) {
    if (g1.n != g2.n) throw InvalidArgument("cannot compose elements of different dihedral groups");
    // P^a S^b P^c S^d, with S P^c = P^-c S
    const int h = g1.l == 0 ? g1.h + g2.h : g1.h - g2.h;
    return {g1.n, mod(h, g1.n), (g1.l + g2.l) % 2};
}

DihedralElement inverse(const DihedralElement& g) {
    // reflections are involutions
    return g.l == 1 ? g : DihedralElement{g.n, mod(-g.h, g.n), 0};
}

std::size_t source_index(const DihedralElement& g, std::size_t k) {
    // 1-based: (P^h m)_k = m_{k+h}, (P^h S m)_k = m_{n-k-h}; index 0 stands for n
    const int n = g.n;
    const long long one_based = static_cast<long long>(k) + 1;
    const int src = g.l == 0 ? mod(one_based + g.h, n) : mod(n - one_based - g.h, n);
    return static_cast<std::size_t>(src == 0 ? n - 1 : src - 1);
}

std::vector<double> permute(const DihedralElement& g, std::span<const double> x) {
    check_dimension(g, x.size());
    std::vector<double> out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[source_index(g, k)];
    return out;
}

MassVector act_on_masses(const DihedralElement& g, const MassVector& m) {
    return MassVector(permute(g, m.values()));
}

AngleConfig act_on_angles(const DihedralElement& g, const AngleConfig& theta) {
    check_dimension(g, theta.size());
    if (!theta.in_fundamental_domain()) throw InvalidArgument("act_on_angles needs theta_n = 2pi");
    const int n = g.n;

    // Periodic extension: T(i) = theta_i (1-based), T(0) = 0, T(i + n) = T(i) + 2pi.
    auto ext = [&](long long i) {
        const int r = mod(i, n);
        const double base = r == 0 ? 0.0 : theta[static_cast<std::size_t>(r - 1)];
        return base + kTwoPi * static_cast<double>((i - r) / n);
    };

    std::vector<double> out(theta.size());
    for (int k = 1; k < n; ++k) {
        out[static_cast<std::size_t>(k - 1)] =
            g.l == 0 ? ext(k + g.h) - ext(g.h) : ext(n - g.h) - ext(n - k - g.h);
    }
    out.back() = kTwoPi;
    return AngleConfig(std::move(out));
}

}  // namespace cocirc
