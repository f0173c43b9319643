// diagnostics.hpp — divergence integrals R_j, verdicts, and model classification
//
// R_j^Lambda = integral_Lambda d^n k |lambda F_k|^2 / omega_k^j, reduced to the
// radial density S_{n-1} k^{n-1} lambda^2 F_k^2 / omega^j.  Divergence is
// certified by a dyadic-window exponent analysis, never by quadrature failure.
// For a verdict at the UV end, local_exponent is quoted in the reciprocal
// variable u = 1/k (so that divergence always reads exponent <= -1).

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "udw/coupling.hpp"

namespace udw::diag {

enum class RegionKind { Infrared, Ultraviolet, Full };

// B_0 = {k : omega(k) <= omega0}; Infrared(omega0) and Ultraviolet(omega0)
// partition Full for the same split frequency.
struct Region {
    RegionKind kind = RegionKind::Full;
    double omega0 = 1.0;

    static Region infrared(double w0);
    static Region ultraviolet(double w0);
    static Region full(double w0 = 1.0);
};

enum class End { IR, UV };

struct IntegralVerdict {
    bool finite = true;
    double value = 0.0;
    double error_estimate = 0.0;
    End end = End::IR;
    double local_exponent = 0.0;

    static IntegralVerdict finite_value(double v, double err);
    static IntegralVerdict divergent(End end, double exponent);
};

// Dyadic-window exponent analysis settings (see DESIGN notes in the report).
struct FitSettings {
    int windows = 12;
    double divergence_threshold = -1.0 + 0.02;  // p <= threshold => IR-divergent
    double max_residual = 0.2;                  // log-space RMS for a power-law certificate
};

// Radial integrand of R_j, fused for overflow safety; zero outside the
// profile support.  j = -1 is allowed (the omega-weighted moment).
std::function<double(double)> radial_density(const CouplingFunction& coupling, int j);

// Local IR power of the radial density fitted on dyadic windows; Divergent if
// the fitted p <= -1 within tolerance.
IntegralVerdict ir_verdict(const CouplingFunction& coupling, int j,
                           const FitSettings& fit = {});

// UV counterpart: window-ratio/slope analysis on [k0 2^m, k0 2^{m+1}].
IntegralVerdict uv_verdict(const CouplingFunction& coupling, int j,
                           const FitSettings& fit = {});

IntegralVerdict r_integral(const CouplingFunction& coupling, int j, Region region,
                           const quad::Tolerances& tol = {});

// Certified improper integral of a nonnegative radial density: dyadic-window
// divergence analysis at open ends (IR when lo == 0, UV when hi == inf), then
// adaptive quadrature for the value.  Used for the thermal pairings.
IntegralVerdict certified_nonneg_integral(const std::function<double(double)>& density,
                                          double lo, double hi,
                                          const FitSettings& fit = {},
                                          const quad::Tolerances& tol = {});

enum class Classification { UvSingular, UnboundedBelow, BoundedBelowNonFock, FockRegular };

std::string to_string(Classification c);

struct DiagnosticsReport {
    IntegralVerdict r0, r1, r2;
    Classification classification = Classification::FockRegular;
    std::optional<double> ground_energy;      // present iff r1 finite
    std::optional<double> mean_soft_bosons;   // present iff r2 finite
    bool ground_degenerate = false;           // two-fold degeneracy at delta = 0
    double omega0 = 1.0;
    double delta = 0.0;
    quad::Tolerances tolerances;
};

DiagnosticsReport classify(const CouplingFunction& coupling, double delta,
                           double omega0 = 1.0);

// -R_1 - |delta| (Prop.-1 value); throws DivergenceError when unbounded below.
double ground_energy(const CouplingFunction& coupling, double delta);

// Poisson soft-boson law with mean mu = R_2^region; throws DivergenceError
// ("infinitely many soft bosons") when R_2 diverges on the region.
double boson_pmf(const CouplingFunction& coupling, Region region, long N);

// Van Hove self-adjointness conditions for a static source z_k (same coupling
// type with lambda = 1 and Ftilde := Jtilde).
struct VanHoveVerdict {
    bool first_type = false;   // R_0^{IR} finite and R_2^{UV} finite
    bool second_type = false;  // R_1^{IR} finite and R_2^{UV} finite
};

VanHoveVerdict van_hove(const CouplingFunction& source, double omega0 = 1.0);

} // namespace udw::diag
