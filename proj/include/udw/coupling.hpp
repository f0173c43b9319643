// coupling.hpp — k-space coupling function and finite-norm radial test functions

#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>

#include "udw/modespace.hpp"
#include "udw/profile.hpp"
#include "udw/quadrature.hpp"

namespace udw {

// Effective detector-field coupling F_k = Ftilde(k) / sqrt(2 (2pi)^n omega(k)),
// scaled by the coupling strength lambda.  For massless dispersion, k = 0 is a
// singular point; callers integrate around it.
class CouplingFunction {
public:
    CouplingFunction(ModeSpace ms, SpatialProfile profile, double lambda)
        : mode_space_(ms), profile_(std::move(profile)), lambda_(lambda) {
        if (!std::isfinite(lambda)) throw DomainError("CouplingFunction: lambda must be finite");
    }

    // lambda * Ftilde(k) / sqrt(2 (2pi)^n omega(k)), k > 0
    double value(double k) const;

    const ModeSpace& mode_space() const { return mode_space_; }
    const SpatialProfile& profile() const { return profile_; }
    double lambda() const { return lambda_; }

    CouplingFunction with_lambda(double lambda) const {
        return CouplingFunction(mode_space_, profile_, lambda);
    }

private:
    ModeSpace mode_space_;
    SpatialProfile profile_;
    double lambda_;
};

inline double coupling_value(const CouplingFunction& c, double k) { return c.value(k); }

// Radial complex-valued momentum-space smearing function with finite L2 norm
// under the measure S_{n-1} k^{n-1} dk.  The norm is computed (and the
// finiteness invariant checked) at construction; instances are immutable.
class TestFunction {
public:
    using Fn = std::function<std::complex<double>(double)>;

    TestFunction(ModeSpace ms, Fn f,
                 double support_min = 0.0,
                 double support_max = std::numeric_limits<double>::infinity());

    // For functions whose norm is known in closed form (e.g. images under a
    // unitary multiplier); skips the construction-time quadrature.
    TestFunction(ModeSpace ms, Fn f, double support_min, double support_max,
                 double known_norm_sq);

    static TestFunction zero(ModeSpace ms);

    // 0 outside the declared support
    std::complex<double> operator()(double k) const;

    double norm_sq() const;  // integral d^n k |g_k|^2
    const ModeSpace& mode_space() const;
    double support_min() const;
    double support_max() const;
    bool is_zero() const;

    TestFunction rotated(double t) const;  // g_k -> g_k e^{i omega_k t}; norm preserved
    TestFunction scaled(std::complex<double> c) const;
    TestFunction negated() const { return scaled(-1.0); }
    TestFunction plus(const TestFunction& other) const;

private:
    struct State;
    explicit TestFunction(std::shared_ptr<const State> s) : state_(std::move(s)) {}
    std::shared_ptr<const State> state_;
};

// Hermitian pairing (f, g)_H = integral d^n k conj(f_k) g_k, radially reduced.
std::complex<double> pairing(const TestFunction& f, const TestFunction& g,
                             const quad::Tolerances& tol = {});

} // namespace udw
