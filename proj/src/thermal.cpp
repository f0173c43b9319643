// thermal.cpp — KMS/ground Weyl expectations and thermal weights

#include "udw/thermal.hpp"

#include <cmath>

namespace udw::thermal {

namespace {

DivergenceError::End to_error_end(diag::End e) {
    return e == diag::End::IR ? DivergenceError::End::IR : DivergenceError::End::UV;
}

} // namespace

double coth_pairing(const TestFunction& g, double beta) {
    if (g.is_zero()) return 0.0;
    const ThermalKernel kernel(beta);
    const ModeSpace ms = g.mode_space();
    const double area = sphere_area(ms.n);
    const int n = ms.n;
    auto density = [&, g](double k) {
        if (k <= 0.0) return 0.0;
        const double a = std::abs(g(k));
        return area * std::pow(k, n - 1) * kernel(omega(ms, k)) * a * a;
    };
    const auto v = diag::certified_nonneg_integral(density, g.support_min(), g.support_max());
    if (!v.finite)
        throw DivergenceError(to_error_end(v.end), v.local_exponent,
                              "kms_weyl: coth-kernel pairing (g, coth(bw/2) g) diverges");
    return v.value;
}

double displacement_phase(const CouplingFunction& coupling, const TestFunction& g) {
    if (coupling.lambda() == 0.0 || g.is_zero()) return 0.0;
    const ModeSpace ms = coupling.mode_space();
    if (ms.n != g.mode_space().n)
        throw DomainError("displacement_phase: dimension mismatch");
    const double area = sphere_area(ms.n);
    const int n = ms.n;
    const double lo = std::max(coupling.profile().support_min(), g.support_min());
    const double hi = std::min(coupling.profile().support_max(), g.support_max());
    if (!(lo < hi)) return 0.0;

    // alpha_k = lambda F_k / omega_k; pairing (i alpha, g)
    auto alpha = [&](double k) { return coupling.value(k) / omega(ms, k); };

    auto abs_density = [&, g](double k) {
        if (k <= 0.0) return 0.0;
        return area * std::pow(k, n - 1) * std::abs(alpha(k)) * std::abs(g(k));
    };
    const auto cert = diag::certified_nonneg_integral(abs_density, lo, hi);
    if (!cert.finite)
        throw DivergenceError(to_error_end(cert.end), cert.local_exponent,
                              "kms_weyl: displacement pairing (F/omega, g) diverges");

    auto density = [&, g](double k) -> std::complex<double> {
        if (k <= 0.0) return {};
        // conj(i alpha) g = -i alpha g for real alpha
        return area * std::pow(k, n - 1) * std::complex<double>(0.0, -alpha(k)) * g(k);
    };
    const auto res = quad::integrate_radial<std::complex<double>>(density, lo, hi,
                                                                  std::max(1.0, lo));
    if (!res.converged)
        throw InconclusiveError("displacement_phase: quadrature did not converge");
    return res.value.imag();
}

std::complex<double> kms_weyl(const CouplingFunction& coupling, double beta, int branch,
                              const TestFunction& g) {
    if (!(beta > 0.0)) throw DomainError("kms_weyl: beta must be > 0");
    if (branch != 1 && branch != -1) throw DomainError("kms_weyl: branch must be +1 or -1");
    if (g.is_zero()) return 1.0;
    const double c = coth_pairing(g, beta);
    const double ph = displacement_phase(coupling, g);
    return std::exp(-0.5 * c) * std::polar(1.0, 2.0 * branch * ph);
}

std::complex<double> ground_weyl(const CouplingFunction& coupling, int branch,
                                 const TestFunction& g) {
    if (branch != 1 && branch != -1) throw DomainError("ground_weyl: branch must be +1 or -1");
    if (g.is_zero()) return 1.0;
    const double ph = displacement_phase(coupling, g);
    return std::exp(-0.5 * g.norm_sq()) * std::polar(1.0, 2.0 * branch * ph);
}

double branch_weight(double beta, double delta, int branch) {
    if (!(beta > 0.0)) throw DomainError("branch_weight: beta must be > 0");
    if (branch != 1 && branch != -1) throw DomainError("branch_weight: branch must be +1 or -1");
    return 1.0 / (1.0 + std::exp(2.0 * beta * delta * branch));
}

std::pair<double, double> joint_thermal(double beta, double delta) {
    return {branch_weight(beta, delta, -1), branch_weight(beta, delta, +1)};
}

double planck_density(double beta, double w) {
    if (!(beta > 0.0)) throw DomainError("planck_density: beta must be > 0");
    if (!(w > 0.0))
        throw SingularPointError("planck_density: omega = 0 is IR-singular");
    return 1.0 / std::expm1(beta * w);
}

std::complex<double> zero_temperature_weyl(const CouplingFunction& coupling, int branch,
                                           const TestFunction& g, double beta_start,
                                           double tol) {
    if (!(beta_start > 0.0)) throw DomainError("zero_temperature_weyl: beta must be > 0");
    const auto v1 = kms_weyl(coupling, beta_start, branch, g);
    const auto v2 = kms_weyl(coupling, 2.0 * beta_start, branch, g);
    const auto v4 = kms_weyl(coupling, 4.0 * beta_start, branch, g);
    if (std::abs(v1 - v2) > tol || std::abs(v2 - v4) > tol)
        throw InconclusiveError("zero_temperature_weyl: doubling in beta has not converged");
    return v4;
}

} // namespace udw::thermal
