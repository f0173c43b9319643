// validate.hpp — closed-form vs truncated-Fock comparison harness
//
// The closed forms are evaluated on the same discrete modes the oracle
// diagonalizes (sums replacing the radial integrals), so every row compares
// two independent routes to the same finite-mode quantity.

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "udw/oracle.hpp"

namespace udw::validate {

// ---- closed forms on discrete modes (c_j carries the coupling strength) ----
namespace closed {

std::complex<double> mode_amplitude(double omega, std::complex<double> c, double t);
double theta(const oracle::DiscreteModes& m, double t);
double mean_bosons(const oracle::DiscreteModes& m, double t);
double gamma(const oracle::DiscreteModes& m, double t);  // 2 N(t)
double ground_energy(const oracle::DiscreteModes& m, double delta);

// weights for branch b: displacement -b c_j/omega_j
std::complex<double> ground_weyl(const oracle::DiscreteModes& m, int branch,
                                 const std::vector<std::complex<double>>& g);
std::complex<double> kms_weyl(const oracle::DiscreteModes& m, double beta, int branch,
                              const std::vector<std::complex<double>>& g);

// phi(t) = -Im sum_j conj(2 F_j(t)) g_j
double weyl_phase(const oracle::DiscreteModes& m,
                  const std::vector<std::complex<double>>& g, double t);

// <alpha_t(W(g))> in |g_z><g_z| (x) vacuum = e^{-|g|^2/2} cos(phi(t))
std::complex<double> weyl_in_initial(const oracle::DiscreteModes& m,
                                     const std::vector<std::complex<double>>& g, double t);

// <alpha_t(sigma^z)> in the same initial state: -e^{-Gamma(t)}
double sigma_z_in_initial(const oracle::DiscreteModes& m, double t);

double entropy_from_gamma(double gamma);

} // namespace closed

// ---- comparison harness -----------------------------------------------------

struct Row {
    std::string quantity;
    double closed_form = 0.0;
    double oracle = 0.0;
    double abs_diff = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;  // failure cause (e.g. truncation inadequacy)
};

struct Fixture {
    oracle::DiscreteModes modes;
    double delta = 0.0;
    oracle::NmaxPolicy policy;
    std::optional<int> forced_n_max;  // bypass auto-convergence (error-path fixtures)
    std::vector<std::complex<double>> g;  // Weyl argument per mode
    std::vector<double> times;
    std::vector<double> betas;
    double tolerance = 1e-8;
    double dynamics_tolerance = 1e-4;
};

struct Report {
    std::vector<Row> rows;
    bool all_pass = true;
    int n_max = 0;
    std::size_t dim = 0;
    oracle::ConvergenceRecord convergence;
};

Report run_validation(const Fixture& fixture);

} // namespace udw::validate
