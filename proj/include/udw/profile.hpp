// profile.hpp — isotropic spatial smearing profiles via their radial Fourier transforms

#pragma once

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "udw/errors.hpp"

namespace udw {

// A smearing profile is represented by its radial Fourier transform Ftilde(k),
// normalized so that Ftilde(0) = 1 for the analytic families (one strength
// dial: the coupling constant).  Values are immutable after construction.
class SpatialProfile {
public:
    enum class Family { Gaussian, Lorentzian, CompactBump, Pointlike, PowerRegularized, Tabulated };

    // Ftilde(k) = exp(-sigma^2 k^2 / 2)
    static SpatialProfile gaussian(double sigma);
    // Ftilde(k) = exp(-sigma k)
    static SpatialProfile lorentzian(double sigma);
    // uniform ball of radius rho: Ftilde(k) = 3 (sin x - x cos x)/x^3, x = k rho
    static SpatialProfile compact_bump(double rho);
    // hard UV cutoff: Ftilde(k) = 1 for k <= cutoff, 0 above
    static SpatialProfile pointlike(double cutoff);
    // Ftilde(k) = k^a * Ftilde_base(k), a >= 0
    static SpatialProfile power_regularized(double exponent, SpatialProfile base);
    // monotone-cubic interpolation of (k, Ftilde) samples; no extrapolation
    static SpatialProfile tabulated(std::vector<double> k, std::vector<double> value);
    // two-column CSV (k, Ftilde), strictly increasing k, '#' comments
    static SpatialProfile tabulated_from_csv(const std::string& path);

    // Ftilde evaluated at k >= 0.  Tabulated profiles reject queries outside
    // their sample range.
    double fourier(double k) const;

    // Radial interval outside of which the profile is treated as zero for the
    // purpose of integration.  [0, inf) for the analytic families.
    double support_min() const;
    double support_max() const;

    Family family() const;
    double parameter() const;        // sigma / rho / cutoff / exponent
    SpatialProfile base_profile() const;  // PowerRegularized only, throws otherwise

private:
    struct Impl;
    explicit SpatialProfile(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

} // namespace udw
