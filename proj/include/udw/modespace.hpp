// modespace.hpp — field kinematics: spatial dimension and dispersion relation

#pragma once

#include <cmath>
#include <numbers>

#include "udw/errors.hpp"

namespace udw {

struct Dispersion {
    enum class Kind { Massless, Massive };
    Kind kind = Kind::Massless;
    double mass = 0.0;  // natural units, hbar = c = 1

    static Dispersion massless() { return {Kind::Massless, 0.0}; }
    static Dispersion massive(double m) {
        if (!(m > 0.0)) throw DomainError("Dispersion: massive dispersion needs mass > 0");
        return {Kind::Massive, m};
    }
    bool is_massless() const { return kind == Kind::Massless; }
};

struct ModeSpace {
    int n = 3;  // spatial dimension
    Dispersion dispersion;

    ModeSpace() = default;
    ModeSpace(int dim, Dispersion d) : n(dim), dispersion(d) {
        if (n < 1) throw DomainError("ModeSpace: spatial dimension must be >= 1");
    }
};

// omega(k) = sqrt(k^2 + m^2); strictly increasing, positive for k > 0.
inline double omega(const ModeSpace& ms, double k) {
    if (k < 0.0) throw DomainError("omega: negative radial momentum");
    const double m = ms.dispersion.mass;
    return (m == 0.0) ? k : std::hypot(k, m);
}

// Surface area of the unit (n-1)-sphere: S_{n-1} = 2 pi^{n/2} / Gamma(n/2).
inline double sphere_area(int n) {
    if (n < 1) throw DomainError("sphere_area: dimension must be >= 1");
    return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

} // namespace udw
