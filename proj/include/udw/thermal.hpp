// thermal.hpp — KMS expectation values, joint thermal weights, Planck density

#pragma once

#include <complex>
#include <utility>

#include "udw/coupling.hpp"
#include "udw/diagnostics.hpp"

namespace udw::thermal {

// coth(beta omega / 2) multiplier on the radial measure; K >= 1, -> 1 as
// beta*omega -> inf, ~ 2/(beta omega) as beta*omega -> 0.
struct ThermalKernel {
    double beta;

    explicit ThermalKernel(double b) : beta(b) {
        if (!(b > 0.0)) throw DomainError("ThermalKernel: beta must be > 0");
    }
    double operator()(double w) const { return 1.0 / std::tanh(0.5 * beta * w); }
};

// (g, coth(beta omega/2) g)_H with a certified IR verdict; throws
// DivergenceError naming the coth pairing when it diverges.
double coth_pairing(const TestFunction& g, double beta);

// Im (i lambda F/omega, g)_H; throws DivergenceError naming the displacement
// pairing when (F/omega, g) diverges.
double displacement_phase(const CouplingFunction& coupling, const TestFunction& g);

// omega_{beta,branch}(W(g)) = exp(-coth pairing / 2) exp(branch 2i Im(i lambda F/omega, g)).
std::complex<double> kms_weyl(const CouplingFunction& coupling, double beta, int branch,
                              const TestFunction& g);

// Ground-branch expectation (beta -> inf limit): exp(-|g|^2/2) with the same
// displacement phase.
std::complex<double> ground_weyl(const CouplingFunction& coupling, int branch,
                                 const TestFunction& g);

// Diagonal weights of the joint KMS state; they sum to 1 and reduce to the
// Gibbs weights of the detuning term.  The first element is the weight of the
// thermally favored branch b = -sign(delta) (branch weight 1/(1+e^{2 beta delta b})).
std::pair<double, double> joint_thermal(double beta, double delta);

// Weight carried by qubit branch b (+1/-1) in the joint KMS state.
double branch_weight(double beta, double delta, int branch);

// Planck momentum density 1/(e^{beta omega} - 1); 1 + 2 rho = coth(beta omega/2).
double planck_density(double beta, double w);

// Zero-temperature limit of the branch KMS functional, evaluated at large
// finite beta with a doubling certificate: values at (beta, 2beta, 4beta)
// must agree within tol.  Returns the 4*beta value.
std::complex<double> zero_temperature_weyl(const CouplingFunction& coupling, int branch,
                                           const TestFunction& g, double beta_start,
                                           double tol = 1e-8);

} // namespace udw::thermal
