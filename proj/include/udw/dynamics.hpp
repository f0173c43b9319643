// dynamics.hpp — exact Heisenberg dynamics of the gapless model
//
// Observables evolve as 2x2 matrices over the sigma^x eigenbasis |+>, |->,
// each entry amplitude * e^{i phase} * W(argument).  The per-mode quantities
// follow the mode-by-mode factorization of e^{it(h + phi)}:
//   F_k(t)  = -(i F_k / omega)(1 - e^{-i omega t})        (unit coupling)
//   Theta(t) = integral d^n k lambda^2 |F_k|^2 (sin wt - wt)/w^2
// The gap parameter must be zero; the exact results do not extend to it.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "udw/coupling.hpp"
#include "udw/thermal.hpp"

namespace udw::dyn {

struct WeylEntry {
    std::complex<double> amplitude{0.0, 0.0};
    std::optional<TestFunction> argument;  // nullopt: identity Weyl element W(0)
    double phase = 0.0;

    bool vanishes() const { return amplitude == std::complex<double>{}; }
};

// Index 0 = |+>, 1 = |->.
class EvolvedWeylObservable {
public:
    WeylEntry& entry(int i, int j) { return entries_.at(2 * i + j); }
    const WeylEntry& entry(int i, int j) const { return entries_.at(2 * i + j); }

    // entry(j,i) must be the conjugate-transpose partner of entry(i,j):
    // amplitude conjugated (including phase), argument negated.
    bool is_hermitian_pattern(double tol = 1e-12) const;

private:
    std::array<WeylEntry, 4> entries_{};
};

// Detector parameters: the gap is carried but must be zero for dynamics.
struct DetectorParams {
    double omega_gap = 0.0;
    double delta = 0.0;
};

void require_gapless(const DetectorParams& d);

// ---- Lemma-1 quantities -------------------------------------------------

// F_k(t) at unit coupling strength; callers scale by lambda.
std::complex<double> mode_amplitude(const CouplingFunction& coupling, double k, double t);

// Integrated phase Theta(t); requires R_1 finite (the -wt term), throws
// DivergenceError with end identification otherwise.
double theta_phase(const CouplingFunction& coupling, double t);

// phi(t) = -Im (2 lambda F(t), g)_H.
double weyl_phase(const CouplingFunction& coupling, const TestFunction& g, double t);

// alpha_t(W(g)): diagonal entries {1, g e^{i w t}, +-phi(t)}.
EvolvedWeylObservable evolve_weyl(const CouplingFunction& coupling, const TestFunction& g,
                                  double t);

enum class Axis { X, Y, Z };

// sigma^x is conserved; sigma^z dresses off-diagonally with W(+-2 lambda F(t));
// sigma^y = i sigma^x sigma^z.
EvolvedWeylObservable evolve_sigma(const CouplingFunction& coupling, Axis axis, double t);

// N(t) = integral d^n k lambda^2 |F_k|^2 (2 - 2 cos wt)/w^2; N(0) = 0;
// IR-safe for finite t, UV-safe given R_0 finiteness.
double mean_boson_number(const CouplingFunction& coupling, double t);

// ---- states ---------------------------------------------------------------

struct VacuumState {};
struct CoherentState {
    TestFunction amplitude;
};
struct KmsState {
    double beta;
    int branch;  // +1 or -1; field displaced by -branch * lambda F/omega
};
struct JointGroundState {
    int branch;  // qubit |branch>, field coherent(-branch * lambda F/omega)
    static JointGroundState from_delta_sign(double delta);
};
struct JointThermalState {
    double beta;
    double delta;
};

using FieldState = std::variant<VacuumState, CoherentState, KmsState>;

struct ProductInitialState {
    Eigen::Matrix2cd qubit_pm;  // density matrix in the |+>, |-> basis
    FieldState field;

    ProductInitialState(Eigen::Matrix2cd rho, FieldState f);

    // |g><g| (sigma_z eigenstate, eigenvalue -1) tensor vacuum — the
    // benchmark scenario.
    static ProductInitialState sigma_z_ground_vacuum();
};

using StateSpec = std::variant<VacuumState, CoherentState, KmsState, JointGroundState,
                               JointThermalState, ProductInitialState>;

std::complex<double> state_expectation(const CouplingFunction& coupling,
                                       const StateSpec& state,
                                       const EvolvedWeylObservable& obs);

// ---- reduced qubit ----------------------------------------------------------

struct ReducedQubit {
    Eigen::Matrix2cd rho_pm;
    double entropy = 0.0;  // von Neumann entropy, natural log, in [0, log 2]
    double gamma = 0.0;    // decoherence exponent Gamma(t) = 2 N(t)
};

// Exact reduced state for a product initial state with vacuum field sector;
// other field states are outside the exactly solved scenario.
ReducedQubit reduced_qubit(const CouplingFunction& coupling,
                           const ProductInitialState& initial, double t);

// ---- plumbing ---------------------------------------------------------------

struct TimeSeries {
    std::vector<double> times;
    std::vector<std::complex<double>> values;
    std::string observable;

    void push(double t, std::complex<double> v);
};

} // namespace udw::dyn
