// validate.cpp — discrete closed forms and the row-by-row comparison harness

#include "udw/validate.hpp"

#include <cmath>

#include "udw/dynamics.hpp"

namespace udw::validate {

namespace closed {

std::complex<double> mode_amplitude(double omega, std::complex<double> c, double t) {
    const double half = 0.5 * omega * t;
    const double s = std::sin(half);
    const std::complex<double> one_minus(2.0 * s * s, std::sin(omega * t));
    return std::complex<double>(0.0, -1.0) * (c / omega) * one_minus;
}

double theta(const oracle::DiscreteModes& m, double t) {
    double acc = 0.0;
    for (const auto& mode : m.modes)
        acc += std::norm(mode.c) * (std::sin(mode.omega * t) - mode.omega * t) /
               (mode.omega * mode.omega);
    return acc;
}

double mean_bosons(const oracle::DiscreteModes& m, double t) {
    double acc = 0.0;
    for (const auto& mode : m.modes) {
        const double s = std::sin(0.5 * mode.omega * t);
        acc += std::norm(mode.c) * 4.0 * s * s / (mode.omega * mode.omega);
    }
    return acc;
}

double gamma(const oracle::DiscreteModes& m, double t) { return 2.0 * mean_bosons(m, t); }

double ground_energy(const oracle::DiscreteModes& m, double delta) {
    return -m.r1_discrete - std::abs(delta);
}

namespace {

std::complex<double> displaced_gaussian(const oracle::DiscreteModes& m, int branch,
                                        const std::vector<std::complex<double>>& g,
                                        double kernel_of_omega(double, double), double beta) {
    double quad = 0.0;
    double phase = 0.0;
    for (std::size_t j = 0; j < m.modes.size(); ++j) {
        const auto& mode = m.modes[j];
        quad += kernel_of_omega(beta, mode.omega) * std::norm(g[j]);
        // displacement h_j = -branch c_j / omega_j; phase 2 Re conj(h_j) g_j
        const std::complex<double> h = -static_cast<double>(branch) * mode.c / mode.omega;
        phase += 2.0 * (std::conj(h) * g[j]).real();
    }
    return std::exp(-0.5 * quad) * std::polar(1.0, phase);
}

double unit_kernel(double, double) { return 1.0; }
double coth_kernel(double beta, double w) { return 1.0 / std::tanh(0.5 * beta * w); }

} // namespace

std::complex<double> ground_weyl(const oracle::DiscreteModes& m, int branch,
                                 const std::vector<std::complex<double>>& g) {
    if (g.size() != m.size()) throw DomainError("ground_weyl: one amplitude per mode");
    return displaced_gaussian(m, branch, g, unit_kernel, 0.0);
}

std::complex<double> kms_weyl(const oracle::DiscreteModes& m, double beta, int branch,
                              const std::vector<std::complex<double>>& g) {
    if (g.size() != m.size()) throw DomainError("kms_weyl: one amplitude per mode");
    if (!(beta > 0.0)) throw DomainError("kms_weyl: beta must be > 0");
    return displaced_gaussian(m, branch, g, coth_kernel, beta);
}

double weyl_phase(const oracle::DiscreteModes& m, const std::vector<std::complex<double>>& g,
                  double t) {
    std::complex<double> inner{};
    for (std::size_t j = 0; j < m.modes.size(); ++j)
        inner += std::conj(2.0 * mode_amplitude(m.modes[j].omega, m.modes[j].c, t)) * g[j];
    return -inner.imag();
}

std::complex<double> weyl_in_initial(const oracle::DiscreteModes& m,
                                     const std::vector<std::complex<double>>& g, double t) {
    double norm_sq = 0.0;
    for (const auto& gj : g) norm_sq += std::norm(gj);
    return std::exp(-0.5 * norm_sq) * std::cos(weyl_phase(m, g, t));
}

double sigma_z_in_initial(const oracle::DiscreteModes& m, double t) {
    return -std::exp(-gamma(m, t));
}

double entropy_from_gamma(double gamma_value) {
    const double d = std::exp(-gamma_value);
    double s = 0.0;
    for (double p : {0.5 * (1.0 + d), 0.5 * (1.0 - d)})
        if (p > 1e-300) s -= p * std::log(p);
    return std::max(s, 0.0);
}

} // namespace closed

namespace {

Row make_row(const std::string& name, double closed_v, double oracle_v, double tol) {
    Row r;
    r.quantity = name;
    r.closed_form = closed_v;
    r.oracle = oracle_v;
    r.abs_diff = std::abs(closed_v - oracle_v);
    r.tolerance = tol;
    r.pass = r.abs_diff <= tol;
    return r;
}

Row error_row(const std::string& name, double tol, const std::string& cause) {
    Row r;
    r.quantity = name;
    r.tolerance = tol;
    r.pass = false;
    r.note = cause;
    return r;
}

} // namespace

Report run_validation(const Fixture& fixture) {
    Report rep;
    if (fixture.g.size() != fixture.modes.size())
        throw DomainError("run_validation: Weyl argument must match the mode count");

    std::optional<oracle::OracleSystem> sys;
    if (fixture.forced_n_max) {
        sys.emplace(fixture.modes, fixture.delta, *fixture.forced_n_max,
                    fixture.policy.budget);
    } else {
        sys.emplace(oracle::converged_system(fixture.modes, fixture.delta, fixture.policy));
    }
    rep.n_max = sys->n_max();
    rep.dim = sys->dim();
    rep.convergence = sys->convergence();

    const auto& modes = fixture.modes;
    const double tol = fixture.tolerance;
    const double dyn_tol = fixture.dynamics_tolerance;

    // Prop.-1 discrete analogue: E_0 = -sum |c|^2/omega - |delta|
    const auto ground = sys->ground_state();
    rep.rows.push_back(
        make_row("ground_energy", closed::ground_energy(modes, fixture.delta), ground.first,
                 std::abs(closed::ground_energy(modes, fixture.delta)) * 1e-8 + tol));

    // ground-state structure: overlap with |b> (x) coherent(-b c/omega)
    const int branch = (fixture.delta > 0.0) ? -1 : +1;
    {
        std::vector<std::complex<double>> alphas;
        for (const auto& mode : modes.modes)
            alphas.push_back(-static_cast<double>(branch) * mode.c / mode.omega);
        const auto ref = oracle::product_state(*sys, branch, alphas);
        const double overlap = std::abs(ref.dot(ground.second));
        rep.rows.push_back(make_row("ground_overlap", 1.0, overlap, tol));
    }

    // ground-state Weyl expectation vs the displaced-Gaussian formula
    try {
        const auto closed_v = closed::ground_weyl(modes, branch, fixture.g);
        const auto oracle_v = oracle::expect_weyl(*sys, ground.second, fixture.g);
        rep.rows.push_back(make_row("ground_weyl_re", closed_v.real(), oracle_v.real(), tol));
        rep.rows.push_back(make_row("ground_weyl_im", closed_v.imag(), oracle_v.imag(), tol));
    } catch (const TruncationError& e) {
        rep.rows.push_back(error_row("ground_weyl", tol, e.what()));
    }

    // mean boson number in the ground state: sum |c/omega|^2
    {
        double mean = 0.0;
        for (const auto& mode : modes.modes) mean += std::norm(mode.c / mode.omega);
        rep.rows.push_back(make_row("ground_mean_bosons", mean,
                                    oracle::expect_number_total(*sys, ground.second), tol));
    }

    // dynamics rows over the requested time grid
    if (!fixture.times.empty()) {
        const auto psi0 = oracle::sigma_z_ground_vacuum(*sys);
        double weyl_worst = 0.0, sigx_worst = 0.0, gamma_worst = 0.0, entropy_worst = 0.0,
               bosons_worst = 0.0, sigz_worst = 0.0;
        std::string trunc_cause;
        for (double t : fixture.times) {
            const auto psi = sys->evolve(psi0, t);
            try {
                const auto wv = oracle::expect_weyl(*sys, psi, fixture.g);
                weyl_worst = std::max(
                    weyl_worst,
                    std::abs(wv - closed::weyl_in_initial(modes, fixture.g, t)));
            } catch (const TruncationError& e) {
                trunc_cause = e.what();
                break;
            }
            sigx_worst = std::max(
                sigx_worst,
                std::abs(oracle::expect_sigma(*sys, psi, oracle::SigmaAxis::X)));
            sigz_worst = std::max(
                sigz_worst, std::abs(oracle::expect_sigma(*sys, psi, oracle::SigmaAxis::Z) -
                                     closed::sigma_z_in_initial(modes, t)));
            const auto rho = oracle::qubit_reduced(*sys, psi);
            const double g_closed = closed::gamma(modes, t);
            const double off = std::abs(rho(0, 1));
            const double g_oracle = (off > 1e-300) ? -std::log(2.0 * off) : g_closed;
            gamma_worst = std::max(gamma_worst, std::abs(g_oracle - g_closed));
            entropy_worst = std::max(entropy_worst,
                                     std::abs(oracle::entropy_of_qubit(rho) -
                                              closed::entropy_from_gamma(g_closed)));
            bosons_worst = std::max(bosons_worst,
                                    std::abs(oracle::expect_number_total(*sys, psi) -
                                             closed::mean_bosons(modes, t)));
        }
        if (!trunc_cause.empty()) {
            rep.rows.push_back(error_row("weyl_series", dyn_tol, trunc_cause));
        } else {
            rep.rows.push_back(make_row("weyl_series_max_diff", 0.0, weyl_worst, dyn_tol));
            rep.rows.push_back(make_row("sigma_x_conservation", 0.0, sigx_worst, 1e-12));
            rep.rows.push_back(make_row("sigma_z_max_diff", 0.0, sigz_worst, dyn_tol));
            rep.rows.push_back(make_row("gamma_max_diff", 0.0, gamma_worst, dyn_tol));
            rep.rows.push_back(make_row("entropy_max_diff", 0.0, entropy_worst, dyn_tol));
            rep.rows.push_back(make_row("mean_bosons_max_diff", 0.0, bosons_worst, dyn_tol));
        }
    }

    // thermal rows: joint KMS formula (branch-weighted mixture of the displaced
    // Gaussians) vs the Gibbs expectation over the truncated spectrum
    for (double beta : fixture.betas) {
        const auto closed_v =
            thermal::branch_weight(beta, fixture.delta, +1) *
                closed::kms_weyl(modes, beta, +1, fixture.g) +
            thermal::branch_weight(beta, fixture.delta, -1) *
                closed::kms_weyl(modes, beta, -1, fixture.g);
        const auto oracle_v = oracle::expect_weyl_thermal(*sys, beta, fixture.g);
        const std::string tag = "kms_weyl[beta=" + std::to_string(beta) + "]";
        rep.rows.push_back(make_row(tag + "_re", closed_v.real(), oracle_v.real(), tol));
        rep.rows.push_back(make_row(tag + "_im", closed_v.imag(), oracle_v.imag(), tol));
    }

    for (const auto& row : rep.rows) rep.all_pass = rep.all_pass && row.pass;
    return rep;
}

} // namespace udw::validate
