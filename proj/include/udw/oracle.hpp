// oracle.hpp — brute-force verifier: discretized modes, truncated Fock space,
// dense/iterative diagonalization of the gapless spin-boson Hamiltonian
//
// Basis ordering: qubit index slowest (0 = |+>, 1 = |->, the sigma^x
// eigenbasis, in which the Hamiltonian is block diagonal), then modes
// ascending in omega with occupation little-endian (mode 0 varies fastest).

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "udw/coupling.hpp"

namespace udw::oracle {

struct Mode {
    double omega = 0.0;
    std::complex<double> c;  // effective coupling, quadrature weight absorbed
};

struct DiscreteModes {
    std::vector<Mode> modes;  // sorted ascending omega
    double r1_discrete = 0.0;  // sum |c_j|^2 / omega_j
    std::optional<double> r1_continuum;  // recorded quadrature target, when finite
    std::string derivation = "explicit";
    // grid metadata when derived from a continuum coupling (aligned with modes)
    std::vector<double> grid_k, grid_w;
    int dimension = 0;  // spatial dimension of the source coupling; 0 for explicit

    static DiscreteModes explicit_modes(std::vector<Mode> modes);
    std::size_t size() const { return modes.size(); }

    // Embedding of a radial function into the discrete modes with the same
    // weights as the couplings: g_j = g(k_j) sqrt(S_{n-1} k_j^{n-1} w_j).
    std::vector<std::complex<double>> embed(
        const std::function<std::complex<double>(double)>& g) const;
};

enum class GridStrategy { LinearGrid, GaussPanels };

// Continuum-to-finite reduction: |c_j|^2 = S_{n-1} k_j^{n-1} w_j (lambda F_{k_j})^2.
// Refuses when the profile carries more than `tail_threshold` of its R_0 mass
// above k_max.
DiscreteModes discretize(const CouplingFunction& coupling, std::size_t M,
                         GridStrategy strategy, double k_max,
                         double tail_threshold = 1e-10);

struct ConvergenceRecord {
    std::vector<int> n_max_sweep;
    std::vector<double> energies;
    double final_delta = 0.0;
};

class OracleSystem {
public:
    static constexpr std::size_t kDefaultBudget = 200000;  // total basis states
    static constexpr std::size_t kDenseLimit = 4096;       // per field block

    OracleSystem(DiscreteModes modes, double delta, int n_max,
                 std::size_t budget = kDefaultBudget);

    const DiscreteModes& modes() const { return modes_; }
    double delta() const { return delta_; }
    int n_max() const { return n_max_; }
    std::size_t field_dim() const { return field_dim_; }
    std::size_t dim() const { return 2 * field_dim_; }

    // H_s x for the field block attached to qubit branch s (+1/-1).
    void apply_block(int branch, const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;

    // Dense field-block Hamiltonian; only below the dense limit.
    Eigen::MatrixXcd dense_block(int branch) const;

    // Full dense Hamiltonian (2 field_dim); for small fixtures and tests.
    Eigen::MatrixXcd dense_hamiltonian() const;

    // Lowest eigenpair of a block: dense below the limit, Lanczos above.
    std::pair<double, Eigen::VectorXcd> block_ground(int branch) const;

    // Lowest eigenpair of the full Hamiltonian; vector lives in the winning
    // block (the other block's components are zero).
    std::pair<double, Eigen::VectorXcd> ground_state() const;

    // Two lowest eigenvalues across both blocks (degeneracy gap at delta = 0).
    std::pair<double, double> two_lowest() const;

    // e^{-iHt} psi via per-block eigendecomposition (dense blocks only).
    Eigen::VectorXcd evolve(const Eigen::VectorXcd& psi0, double t) const;

    // occupation of mode j in basis state f
    int occupation(std::size_t f, std::size_t j) const;

    const ConvergenceRecord& convergence() const { return convergence_; }
    void set_convergence(ConvergenceRecord rec) { convergence_ = std::move(rec); }

    // Cached dense eigendecompositions (computed on first use; a system
    // instance is not safe for concurrent first-time decomposition).
    struct BlockEigen {
        Eigen::VectorXd values;
        Eigen::MatrixXcd vectors;
    };
    const BlockEigen& block_eigen(int branch) const;

private:
    DiscreteModes modes_;
    double delta_;
    int n_max_;
    std::size_t field_dim_;
    std::vector<std::size_t> strides_;
    mutable std::unique_ptr<BlockEigen> eig_plus_, eig_minus_;
};

// Default occupation-cutoff policy: start at ceil(4 max_j |c_j/omega_j|^2 + 10),
// certify |E(n_max) - E(n_max/2)| < tol, double while the certificate fails.
struct NmaxPolicy {
    int start = 0;  // 0: derive from the displacement scale
    double tol = 1e-10;
    std::size_t budget = OracleSystem::kDefaultBudget;
};

// Build a system with a convergence-certified n_max (sweep recorded on the
// returned system).  Throws BudgetError when certification cannot fit.
OracleSystem converged_system(const DiscreteModes& modes, double delta,
                              const NmaxPolicy& policy = {});

// ---- expectation values ------------------------------------------------

enum class SigmaAxis { X, Y, Z };

// Per-mode truncation adequacy: <N_j> + 5 stddev(N_j) < n_max for the state.
void require_truncation_adequate(const OracleSystem& sys, const Eigen::VectorXcd& psi);

// Field Weyl displacement operator W(g) = exp(i phi(g)) as a dense matrix on
// the field block (g given per mode).
Eigen::MatrixXcd weyl_matrix(const OracleSystem& sys,
                             const std::vector<std::complex<double>>& g);

std::complex<double> expect_weyl(const OracleSystem& sys, const Eigen::VectorXcd& psi,
                                 const std::vector<std::complex<double>>& g);

// Gibbs expectation of 1 (x) W(g) over the truncated spectrum.
std::complex<double> expect_weyl_thermal(const OracleSystem& sys, double beta,
                                         const std::vector<std::complex<double>>& g);

// Gibbs expectation of W(g) restricted to one sigma^x block (the single-branch
// thermal functional omega_{beta,branch}).
std::complex<double> expect_weyl_thermal_block(const OracleSystem& sys, int branch,
                                               double beta,
                                               const std::vector<std::complex<double>>& g);

std::complex<double> expect_sigma(const OracleSystem& sys, const Eigen::VectorXcd& psi,
                                  SigmaAxis axis);

double expect_number_total(const OracleSystem& sys, const Eigen::VectorXcd& psi);

Eigen::Matrix2cd qubit_reduced(const OracleSystem& sys, const Eigen::VectorXcd& psi);

double entropy_of_qubit(const Eigen::Matrix2cd& rho);

// P(total boson number = N) for N = 0..n_hi.
std::vector<double> number_distribution(const OracleSystem& sys,
                                        const Eigen::VectorXcd& psi, int n_hi);

// Product state |qubit branch> (x) vacuum (or explicit field amplitudes).
Eigen::VectorXcd product_state(const OracleSystem& sys, int branch,
                               const std::vector<std::complex<double>>& coherent);

// sigma_z eigenstate (eigenvalue -1) (x) vacuum: (|+> - |->)/sqrt(2) (x) |0>.
Eigen::VectorXcd sigma_z_ground_vacuum(const OracleSystem& sys);

} // namespace udw::oracle
