// diagnostics.cpp — R_j quadrature, dyadic exponent fits, classification

#include "udw/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace udw::diag {

Region Region::infrared(double w0) {
    if (!(w0 > 0.0)) throw DomainError("Region: split frequency must be > 0");
    return {RegionKind::Infrared, w0};
}
Region Region::ultraviolet(double w0) {
    if (!(w0 > 0.0)) throw DomainError("Region: split frequency must be > 0");
    return {RegionKind::Ultraviolet, w0};
}
Region Region::full(double w0) {
    if (!(w0 > 0.0)) throw DomainError("Region: split frequency must be > 0");
    return {RegionKind::Full, w0};
}

IntegralVerdict IntegralVerdict::finite_value(double v, double err) {
    IntegralVerdict out;
    out.finite = true;
    out.value = v;
    out.error_estimate = err;
    return out;
}

IntegralVerdict IntegralVerdict::divergent(End end, double exponent) {
    IntegralVerdict out;
    out.finite = false;
    out.end = end;
    out.local_exponent = exponent;
    return out;
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::UvSingular: return "UvSingular";
        case Classification::UnboundedBelow: return "UnboundedBelow";
        case Classification::BoundedBelowNonFock: return "BoundedBelowNonFock";
        case Classification::FockRegular: return "FockRegular";
    }
    return "?";
}

std::function<double(double)> radial_density(const CouplingFunction& coupling, int j) {
    const ModeSpace ms = coupling.mode_space();
    const int n = ms.n;
    const double lam = coupling.lambda();
    const double pref =
        sphere_area(n) * lam * lam / (2.0 * std::pow(2.0 * std::numbers::pi, n));
    const SpatialProfile prof = coupling.profile();
    const double smin = prof.support_min();
    const double smax = prof.support_max();
    return [ms, n, pref, j, prof, smin, smax](double k) {
        if (k <= 0.0 || k < smin || k > smax) return 0.0;
        const double ft = prof.fourier(k);
        const double w = omega(ms, k);
        return pref * ft * ft * std::pow(k, n - 1) / std::pow(w, j + 1);
    };
}

namespace {

// Radius of the ball B_0 = {omega(k) <= w0}; 0 if the ball is empty.
double ball_radius(const ModeSpace& ms, double w0) {
    const double m = ms.dispersion.mass;
    if (w0 <= m) return 0.0;
    return std::sqrt(w0 * w0 - m * m);
}

// Profile oscillation scale (compact-bump radius), used to pick composite
// panels for slowly decaying oscillatory tails.  0 means no oscillation.
double oscillation_scale(const SpatialProfile& p) {
    if (p.family() == SpatialProfile::Family::CompactBump) return p.parameter();
    if (p.family() == SpatialProfile::Family::PowerRegularized)
        return oscillation_scale(p.base_profile());
    return 0.0;
}

struct WindowAnalysis {
    std::vector<double> integrals;  // per dyadic window, ordered toward the end
    double slope = 0.0;             // fitted log-log slope vs window midpoint
    double residual = 0.0;          // RMS residual of the fit (log space)
    bool power_law = false;
    bool all_zero = false;
    bool tail_zero = false;  // windows nearest the end are identically zero
    double ratio_max = 0.0;  // max of the last few window ratios toward the end
};

// Integrate the density over dyadic windows and fit log(mean) vs log(k_mid).
// `edges` must be ordered so that successive windows approach the end under
// scrutiny (k -> 0 for IR, k -> inf for UV).
WindowAnalysis analyze_windows(const std::function<double(double)>& density,
                               const std::vector<std::pair<double, double>>& edges) {
    WindowAnalysis out;
    quad::Tolerances wt;
    wt.rel = 1e-10;
    wt.abs = 0.0;
    wt.max_panels = 2000;

    std::vector<double> logs, logk;
    bool leading_nonzero_seen = false;
    std::size_t zeros_at_end = 0;
    for (const auto& [lo, hi] : edges) {
        const auto res = quad::integrate(density, lo, hi, wt);
        out.integrals.push_back(res.value);
        if (res.value > 0.0) {
            leading_nonzero_seen = true;
            zeros_at_end = 0;
            logs.push_back(std::log(res.value / (hi - lo)));
            logk.push_back(std::log(std::sqrt(lo * hi)));
        } else {
            ++zeros_at_end;
        }
    }
    if (!leading_nonzero_seen) {
        out.all_zero = true;
        return out;
    }
    out.tail_zero = zeros_at_end > 0;

    if (logs.size() >= 4) {
        const std::size_t n = logs.size();
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sx += logk[i];
            sy += logs[i];
            sxx += logk[i] * logk[i];
            sxy += logk[i] * logs[i];
        }
        const double denom = n * sxx - sx * sx;
        out.slope = (n * sxy - sx * sy) / denom;
        const double intercept = (sy - out.slope * sx) / n;
        double rss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = logs[i] - (out.slope * logk[i] + intercept);
            rss += r * r;
        }
        out.residual = std::sqrt(rss / n);
        out.power_law = true;
    }

    // Ratio of successive nonzero window integrals approaching the end.
    double rmax = 0.0;
    std::size_t counted = 0;
    for (std::size_t i = out.integrals.size(); i-- > 1 && counted < 6;) {
        const double next = out.integrals[i];
        const double prev = out.integrals[i - 1];
        if (prev > 0.0 && next > 0.0) {
            rmax = std::max(rmax, next / prev);
            ++counted;
        }
    }
    out.ratio_max = counted ? rmax : 0.0;
    return out;
}

std::string window_dump(const WindowAnalysis& w) {
    std::ostringstream os;
    os << "slope=" << w.slope << " residual=" << w.residual << " ratio_max=" << w.ratio_max
       << " windows=";
    for (double v : w.integrals) os << v << ",";
    return os.str();
}

// Integral of the density over [lo, hi]; hi may be infinite.  Oscillatory
// profiles get composite-period chunks with doubling extent; smooth profiles
// get the mapped tail.
IntegralVerdict quadrature_value(const CouplingFunction& coupling, int j, double lo,
                                 double hi, const quad::Tolerances& tol) {
    const auto density = radial_density(coupling, j);
    const double osc = oscillation_scale(coupling.profile());
    if (std::isfinite(hi) || osc == 0.0) {
        const auto res = quad::integrate_radial(density, lo, hi, std::max(1.0, lo), tol);
        if (!res.converged) {
            std::ostringstream os;
            os << "panels=" << res.panels << " err=" << res.error_estimate
               << " value=" << res.value;
            throw InconclusiveError("r_integral: quadrature did not converge", os.str());
        }
        return IntegralVerdict::finite_value(res.value, res.error_estimate);
    }

    // Oscillatory infinite tail: head + chunk-doubling composite panels.
    const double width = std::numbers::pi / (2.0 * osc);
    const double head_hi = std::max({1.0, lo * 2.0, 4.0 / osc});
    auto head = quad::integrate(density, lo, head_hi, tol);
    double total = head.value;
    double err = head.error_estimate;
    double a = head_hi;
    double last_chunk = std::abs(total);
    bool converged = false;
    for (int i = 0; i < 48; ++i) {
        const double b = 2.0 * a;
        const auto chunk = quad::integrate_oscillatory(density, a, b, width, tol);
        total += chunk.value;
        err += chunk.error_estimate;
        last_chunk = std::abs(chunk.value);
        a = b;
        if (last_chunk <= std::max(tol.abs, 0.05 * tol.rel * std::abs(total))) {
            converged = true;
            break;
        }
    }
    err += 2.0 * last_chunk;  // geometric remainder allowance
    if (!converged)
        throw InconclusiveError("r_integral: oscillatory tail did not settle",
                                "last_chunk=" + std::to_string(last_chunk));
    return IntegralVerdict::finite_value(total, err);
}

} // namespace

IntegralVerdict certified_nonneg_integral(const std::function<double(double)>& density,
                                          double lo, double hi, const FitSettings& fit,
                                          const quad::Tolerances& tol) {
    auto value = [&]() {
        const auto res = quad::integrate_radial(density, lo, hi, std::max(1.0, lo), tol);
        if (!res.converged)
            throw InconclusiveError("certified_nonneg_integral: quadrature did not converge");
        return IntegralVerdict::finite_value(res.value, res.error_estimate);
    };

    if (lo == 0.0) {
        const double k_top = std::min(1.0, hi);
        std::vector<std::pair<double, double>> edges;
        for (int m = 0; m < fit.windows; ++m)
            edges.emplace_back(k_top * std::ldexp(1.0, -m - 1), k_top * std::ldexp(1.0, -m));
        const auto w = analyze_windows(density, edges);
        if (!w.all_zero && !w.tail_zero) {
            if (w.power_law && w.residual <= fit.max_residual) {
                if (w.slope <= fit.divergence_threshold)
                    return IntegralVerdict::divergent(End::IR, w.slope);
            } else if (w.ratio_max >= 1.0) {
                return IntegralVerdict::divergent(End::IR, -1.0 - std::log2(w.ratio_max));
            } else if (!(w.ratio_max > 0.0 && w.ratio_max <= 0.95)) {
                throw InconclusiveError("certified_nonneg_integral: IR behaviour unresolved",
                                        window_dump(w));
            }
        }
    }
    if (!std::isfinite(hi)) {
        const double k0 = std::max(1.0, lo);
        std::vector<std::pair<double, double>> edges;
        for (int m = 0; m < fit.windows; ++m)
            edges.emplace_back(k0 * std::ldexp(1.0, m), k0 * std::ldexp(1.0, m + 1));
        const auto w = analyze_windows(density, edges);
        if (!w.all_zero && !w.tail_zero) {
            if (w.power_law && w.residual <= fit.max_residual) {
                if (w.slope >= -1.0 - 0.02)
                    return IntegralVerdict::divergent(End::UV, -w.slope - 2.0);
            } else if (w.ratio_max >= 1.0) {
                return IntegralVerdict::divergent(End::UV, -std::log2(w.ratio_max) - 1.0);
            } else if (!(w.ratio_max > 0.0 && w.ratio_max <= 0.95)) {
                throw InconclusiveError("certified_nonneg_integral: UV behaviour unresolved",
                                        window_dump(w));
            }
        }
    }
    return value();
}

IntegralVerdict ir_verdict(const CouplingFunction& coupling, int j, const FitSettings& fit) {
    if (coupling.lambda() == 0.0) return IntegralVerdict::finite_value(0.0, 0.0);
    const auto& prof = coupling.profile();
    const double k_top = std::min(1.0, prof.support_max());
    quad::Tolerances tol;

    // Coupling vanishing near the origin cannot produce an IR divergence.
    if (prof.support_min() > 0.0)
        return quadrature_value(coupling, j, prof.support_min(),
                                std::min(k_top, prof.support_max()), tol);

    const auto density = radial_density(coupling, j);
    std::vector<std::pair<double, double>> edges;
    for (int m = 0; m < fit.windows; ++m)
        edges.emplace_back(k_top * std::ldexp(1.0, -m - 1), k_top * std::ldexp(1.0, -m));

    const auto w = analyze_windows(density, edges);
    if (w.all_zero) return IntegralVerdict::finite_value(0.0, 0.0);
    if (w.tail_zero)  // identically zero approaching k = 0: IR-regular
        return quadrature_value(coupling, j, 0.0, k_top, tol);

    if (w.power_law && w.residual <= fit.max_residual) {
        if (w.slope <= fit.divergence_threshold)
            return IntegralVerdict::divergent(End::IR, w.slope);
        return quadrature_value(coupling, j, 0.0, k_top, tol);
    }
    // Non-power-law: certify by the comparison (ratio) test.
    if (w.ratio_max > 0.0 && w.ratio_max <= 0.95)
        return quadrature_value(coupling, j, 0.0, k_top, tol);
    if (w.ratio_max >= 1.0)
        return IntegralVerdict::divergent(End::IR, -1.0 - std::log2(w.ratio_max));
    throw InconclusiveError("ir_verdict: local behaviour is not a power law", window_dump(w));
}

IntegralVerdict uv_verdict(const CouplingFunction& coupling, int j, const FitSettings& fit) {
    if (coupling.lambda() == 0.0) return IntegralVerdict::finite_value(0.0, 0.0);
    const auto& prof = coupling.profile();
    quad::Tolerances tol;
    if (std::isfinite(prof.support_max()))  // compactly supported in k: UV-regular
        return quadrature_value(coupling, j, std::max(1.0, prof.support_min()),
                                prof.support_max(), tol);

    const double k0 = std::max(1.0, prof.support_min());
    const auto density = radial_density(coupling, j);
    std::vector<std::pair<double, double>> edges;
    for (int m = 0; m < fit.windows; ++m)
        edges.emplace_back(k0 * std::ldexp(1.0, m), k0 * std::ldexp(1.0, m + 1));

    const auto w = analyze_windows(density, edges);
    if (w.all_zero || w.tail_zero)
        return quadrature_value(coupling, j, k0, edges.back().second, tol);

    if (w.power_law && w.residual <= fit.max_residual) {
        if (w.slope >= -1.0 - 0.02)  // integral of k^p to infinity diverges for p >= -1
            return IntegralVerdict::divergent(End::UV, -w.slope - 2.0);
        return quadrature_value(coupling, j, k0, std::numeric_limits<double>::infinity(), tol);
    }
    if (w.ratio_max > 0.0 && w.ratio_max <= 0.95)
        return quadrature_value(coupling, j, k0, std::numeric_limits<double>::infinity(), tol);
    if (w.ratio_max >= 1.0)
        return IntegralVerdict::divergent(End::UV, -(std::log2(w.ratio_max) - 1.0) - 2.0);
    throw InconclusiveError("uv_verdict: tail behaviour is not a power law", window_dump(w));
}

IntegralVerdict r_integral(const CouplingFunction& coupling, int j, Region region,
                           const quad::Tolerances& tol) {
    if (j < 0 || j > 2) throw DomainError("r_integral: j must be in {0, 1, 2}");
    if (coupling.lambda() == 0.0) return IntegralVerdict::finite_value(0.0, 0.0);

    const auto& ms = coupling.mode_space();
    const auto& prof = coupling.profile();
    const double k_split = ball_radius(ms, region.omega0);

    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    switch (region.kind) {
        case RegionKind::Infrared: lo = 0.0; hi = k_split; break;
        case RegionKind::Ultraviolet: lo = k_split; hi = std::numeric_limits<double>::infinity(); break;
        case RegionKind::Full: break;
    }
    lo = std::max(lo, prof.support_min());
    hi = std::min(hi, prof.support_max());
    if (!(lo < hi)) return IntegralVerdict::finite_value(0.0, 0.0);  // empty region

    if (lo == 0.0 && prof.support_min() == 0.0) {
        const auto ir = ir_verdict(coupling, j);
        if (!ir.finite) return ir;
    }
    if (!std::isfinite(hi)) {
        const auto uv = uv_verdict(coupling, j);
        if (!uv.finite) return uv;
    }
    return quadrature_value(coupling, j, lo, hi, tol);
}

DiagnosticsReport classify(const CouplingFunction& coupling, double delta, double omega0) {
    DiagnosticsReport rep;
    rep.omega0 = omega0;
    rep.delta = delta;
    const Region full = Region::full(omega0);
    rep.r0 = r_integral(coupling, 0, full);
    rep.r1 = r_integral(coupling, 1, full);
    rep.r2 = r_integral(coupling, 2, full);

    // Removing powers of 1/omega improves the IR; a report violating the
    // finiteness chain indicates a numerical fault, not physics.
    if (rep.r2.finite && !rep.r1.finite)
        throw InconclusiveError("classify: R_2 finite but R_1 divergent (chain violated)");
    if (rep.r1.finite && !rep.r0.finite && rep.r0.end == End::IR)
        throw InconclusiveError("classify: R_1 finite but R_0 IR-divergent (chain violated)");

    if (!rep.r0.finite && rep.r0.end == End::UV)
        rep.classification = Classification::UvSingular;
    else if (!rep.r1.finite)
        rep.classification = Classification::UnboundedBelow;
    else if (!rep.r2.finite)
        rep.classification = Classification::BoundedBelowNonFock;
    else
        rep.classification = Classification::FockRegular;

    if (rep.r1.finite) {
        rep.ground_energy = -rep.r1.value - std::abs(delta);
        rep.ground_degenerate = (delta == 0.0);
    }
    if (rep.r2.finite) rep.mean_soft_bosons = rep.r2.value;
    return rep;
}

double ground_energy(const CouplingFunction& coupling, double delta) {
    const auto r1 = r_integral(coupling, 1, Region::full());
    if (!r1.finite)
        throw DivergenceError(r1.end == End::IR ? DivergenceError::End::IR
                                                : DivergenceError::End::UV,
                              r1.local_exponent,
                              "ground_energy: R_1 divergent, Hamiltonian unbounded below");
    return -r1.value - std::abs(delta);
}

double boson_pmf(const CouplingFunction& coupling, Region region, long N) {
    if (N < 0) throw DomainError("boson_pmf: boson count must be >= 0");
    const auto r2 = r_integral(coupling, 2, region);
    if (!r2.finite)
        throw DivergenceError(r2.end == End::IR ? DivergenceError::End::IR
                                                : DivergenceError::End::UV,
                              r2.local_exponent,
                              "boson_pmf: R_2 divergent, infinitely many soft bosons");
    const double mu = r2.value;
    if (mu == 0.0) return N == 0 ? 1.0 : 0.0;
    return std::exp(static_cast<double>(N) * std::log(mu) - mu -
                    std::lgamma(static_cast<double>(N) + 1.0));
}

VanHoveVerdict van_hove(const CouplingFunction& source, double omega0) {
    VanHoveVerdict v;
    const auto r0_ir = r_integral(source, 0, Region::infrared(omega0));
    const auto r1_ir = r_integral(source, 1, Region::infrared(omega0));
    const auto r2_uv = r_integral(source, 2, Region::ultraviolet(omega0));
    v.first_type = r0_ir.finite && r2_uv.finite;
    v.second_type = r1_ir.finite && r2_uv.finite;
    return v;
}

} // namespace udw::diag
