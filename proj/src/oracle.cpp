// oracle.cpp — discretization, truncated-Fock Hamiltonian, eigensolvers,
// expectation values

#include "udw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "udw/diagnostics.hpp"

namespace udw::oracle {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// Gauss–Legendre nodes/weights on [-1, 1] by Golub–Welsch.
void gauss_legendre(std::size_t m, std::vector<double>& nodes, std::vector<double>& weights) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t i = 1; i < m; ++i) {
        const double b = i / std::sqrt(4.0 * i * i - 1.0);
        jac(i - 1, i) = b;
        jac(i, i - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    nodes.resize(m);
    weights.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        nodes[i] = es.eigenvalues()(i);
        const double v = es.eigenvectors()(0, i);
        weights[i] = 2.0 * v * v;
    }
}

} // namespace

DiscreteModes DiscreteModes::explicit_modes(std::vector<Mode> modes) {
    if (modes.empty()) throw DomainError("DiscreteModes: need at least one mode");
    for (const auto& m : modes)
        if (!(m.omega > 0.0)) throw DomainError("DiscreteModes: mode frequencies must be > 0");
    std::sort(modes.begin(), modes.end(),
              [](const Mode& a, const Mode& b) { return a.omega < b.omega; });
    DiscreteModes out;
    out.modes = std::move(modes);
    for (const auto& m : out.modes) out.r1_discrete += std::norm(m.c) / m.omega;
    return out;
}

DiscreteModes discretize(const CouplingFunction& coupling, std::size_t M,
                         GridStrategy strategy, double k_max, double tail_threshold) {
    if (M < 1) throw DomainError("discretize: need at least one mode");
    if (!(k_max > 0.0)) throw DomainError("discretize: k_max must be > 0");

    // Refuse when the R_0 density leaves more than tail_threshold above k_max.
    const auto rho0 = diag::radial_density(coupling, 0);
    if (coupling.lambda() != 0.0) {
        const double smax = coupling.profile().support_max();
        if (k_max < smax) {
            const auto head = quad::integrate_radial(rho0, 0.0, k_max, 1.0);
            const auto tail = quad::integrate_radial(rho0, k_max, smax, std::max(1.0, k_max));
            const double total = head.value + tail.value;
            if (total > 0.0 && tail.value / total > tail_threshold) {
                std::ostringstream os;
                os << "discretize: k_max=" << k_max << " leaves tail fraction "
                   << tail.value / total << " of the R_0 mass (threshold " << tail_threshold
                   << ")";
                throw DomainError(os.str());
            }
        }
    }

    const int n = coupling.mode_space().n;
    const double area = sphere_area(n);
    std::vector<double> ks, ws;
    if (strategy == GridStrategy::LinearGrid) {
        const double h = k_max / static_cast<double>(M);
        for (std::size_t j = 0; j < M; ++j) {
            ks.push_back((j + 0.5) * h);
            ws.push_back(h);
        }
    } else {
        std::vector<double> xs, xw;
        gauss_legendre(M, xs, xw);
        for (std::size_t j = 0; j < M; ++j) {
            ks.push_back(0.5 * k_max * (xs[j] + 1.0));
            ws.push_back(0.5 * k_max * xw[j]);
        }
    }

    std::vector<Mode> modes;
    modes.reserve(M);
    for (std::size_t j = 0; j < M; ++j) {
        const double k = ks[j];
        Mode mode;
        mode.omega = omega(coupling.mode_space(), k);
        const double fk = coupling.value(k);  // lambda included
        mode.c = fk * std::sqrt(area * std::pow(k, n - 1) * ws[j]);
        modes.push_back(mode);
    }
    auto out = DiscreteModes::explicit_modes(std::move(modes));
    std::ostringstream os;
    os << (strategy == GridStrategy::LinearGrid ? "linear" : "gauss") << " M=" << M
       << " k_max=" << k_max;
    out.derivation = os.str();
    out.dimension = n;
    // grids are monotone in k and omega alike, so sorting kept the alignment
    out.grid_k = ks;
    out.grid_w = ws;
    const auto r1 = diag::r_integral(coupling, 1, diag::Region::full());
    if (r1.finite) out.r1_continuum = r1.value;
    return out;
}

std::vector<std::complex<double>> DiscreteModes::embed(
    const std::function<std::complex<double>(double)>& g) const {
    if (grid_k.empty() || dimension < 1)
        throw DomainError("DiscreteModes: embedding requires grid metadata from discretize");
    const double area = sphere_area(dimension);
    std::vector<std::complex<double>> out(grid_k.size());
    for (std::size_t j = 0; j < grid_k.size(); ++j)
        out[j] = g(grid_k[j]) *
                 std::sqrt(area * std::pow(grid_k[j], dimension - 1) * grid_w[j]);
    return out;
}

OracleSystem::OracleSystem(DiscreteModes modes, double delta, int n_max, std::size_t budget)
    : modes_(std::move(modes)), delta_(delta), n_max_(n_max) {
    if (n_max_ < 1) throw DomainError("OracleSystem: n_max must be >= 1");
    const std::size_t M = modes_.size();
    long double dim = 1.0L;
    for (std::size_t j = 0; j < M; ++j) dim *= (n_max_ + 1);
    if (2.0L * dim > static_cast<long double>(budget)) {
        std::ostringstream os;
        os << "OracleSystem: dimension 2*(n_max+1)^M = " << 2.0L * dim
           << " exceeds budget " << budget;
        throw BudgetError(static_cast<std::size_t>(std::min(2.0L * dim, 1e18L)), os.str());
    }
    field_dim_ = static_cast<std::size_t>(dim);
    strides_.resize(M);
    std::size_t s = 1;
    for (std::size_t j = 0; j < M; ++j) {
        strides_[j] = s;
        s *= (n_max_ + 1);
    }
}

int OracleSystem::occupation(std::size_t f, std::size_t j) const {
    return static_cast<int>((f / strides_[j]) % (n_max_ + 1));
}

void OracleSystem::apply_block(int branch, const Eigen::VectorXcd& x,
                               Eigen::VectorXcd& y) const {
    if (branch != 1 && branch != -1) throw DomainError("apply_block: branch must be +1 or -1");
    if (static_cast<std::size_t>(x.size()) != field_dim_)
        throw DomainError("apply_block: dimension mismatch");
    const double s = static_cast<double>(branch);
    const std::size_t M = modes_.size();
    y.resize(x.size());
    for (std::size_t f = 0; f < field_dim_; ++f) {
        double diag = s * delta_;
        std::size_t rem = f;
        for (std::size_t j = 0; j < M; ++j) {
            diag += modes_.modes[j].omega * static_cast<double>(rem % (n_max_ + 1));
            rem /= (n_max_ + 1);
        }
        std::complex<double> acc = diag * x(f);
        rem = f;
        for (std::size_t j = 0; j < M; ++j) {
            const int nj = static_cast<int>(rem % (n_max_ + 1));
            rem /= (n_max_ + 1);
            const auto& c = modes_.modes[j].c;
            if (nj < n_max_)  // annihilate from the neighbor above
                acc += s * std::conj(c) * std::sqrt(nj + 1.0) * x(f + strides_[j]);
            if (nj > 0)  // create from the neighbor below
                acc += s * c * std::sqrt(static_cast<double>(nj)) * x(f - strides_[j]);
        }
        y(f) = acc;
    }
}

Eigen::MatrixXcd OracleSystem::dense_block(int branch) const {
    if (field_dim_ > kDenseLimit)
        throw BudgetError(field_dim_, "dense_block: field dimension exceeds the dense limit");
    const double s = static_cast<double>(branch);
    const std::size_t M = modes_.size();
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(field_dim_, field_dim_);
    for (std::size_t f = 0; f < field_dim_; ++f) {
        double diag = s * delta_;
        for (std::size_t j = 0; j < M; ++j)
            diag += modes_.modes[j].omega * occupation(f, j);
        H(f, f) = diag;
        for (std::size_t j = 0; j < M; ++j) {
            const int nj = occupation(f, j);
            if (nj < n_max_) {
                const std::size_t g = f + strides_[j];
                const auto amp = s * modes_.modes[j].c * std::sqrt(nj + 1.0);
                H(g, f) += amp;             // creation
                H(f, g) += std::conj(amp);  // annihilation
            }
        }
    }
    return H;
}

Eigen::MatrixXcd OracleSystem::dense_hamiltonian() const {
    const std::size_t D = field_dim_;
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(2 * D, 2 * D);
    H.topLeftCorner(D, D) = dense_block(+1);
    H.bottomRightCorner(D, D) = dense_block(-1);
    return H;
}

namespace {

// Restarted Lanczos with full reorthogonalization; smallest eigenpair.
std::pair<double, Eigen::VectorXcd> lanczos_smallest(
    std::size_t dim, const std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>& mv,
    double tol = 1e-12, int basis_size = 64, int max_restarts = 400) {
    Eigen::VectorXcd v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v(i) = std::sin(0.7 * (static_cast<double>(i) + 1.0)) +
               0.31 * std::cos(1.37 * static_cast<double>(i) + 0.5);
    v.normalize();

    Eigen::VectorXcd w(dim);
    double theta = 0.0;
    for (int restart = 0; restart < max_restarts; ++restart) {
        std::vector<Eigen::VectorXcd> basis;
        basis.reserve(basis_size);
        std::vector<double> alpha, beta;
        basis.push_back(v);
        for (int m = 0; m < basis_size; ++m) {
            mv(basis.back(), w);
            alpha.push_back(basis.back().dot(w).real());
            // full reorthogonalization, two passes
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& b : basis) w -= b.dot(w) * b;
            const double bnorm = w.norm();
            if (bnorm < 1e-14) break;
            if (static_cast<int>(basis.size()) == basis_size) break;
            beta.push_back(bnorm);
            basis.push_back(w / bnorm);
        }
        const int m = static_cast<int>(alpha.size());
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            T(i, i) = alpha[i];
            if (i + 1 < m) {
                T(i, i + 1) = beta[i];
                T(i + 1, i) = beta[i];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
        theta = es.eigenvalues()(0);
        Eigen::VectorXcd ritz = Eigen::VectorXcd::Zero(dim);
        for (int i = 0; i < static_cast<int>(basis.size()); ++i)
            ritz += es.eigenvectors()(i, 0) * basis[i];
        ritz.normalize();

        mv(ritz, w);
        const double resid = (w - theta * ritz).norm();
        v = ritz;
        if (resid <= tol * std::max(1.0, std::abs(theta))) return {theta, v};
    }
    throw InconclusiveError("lanczos_smallest: no convergence within restart budget");
}

} // namespace

std::pair<double, Eigen::VectorXcd> OracleSystem::block_ground(int branch) const {
    if (field_dim_ <= 512) {
        const auto& eig = block_eigen(branch);
        return {eig.values(0), eig.vectors.col(0)};
    }
    auto mv = [this, branch](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
        apply_block(branch, x, y);
    };
    return lanczos_smallest(field_dim_, mv);
}

std::pair<double, Eigen::VectorXcd> OracleSystem::ground_state() const {
    const auto gp = block_ground(+1);
    const auto gm = block_ground(-1);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim());
    if (gp.first <= gm.first) {
        psi.head(field_dim_) = gp.second;
        return {gp.first, psi};
    }
    psi.tail(field_dim_) = gm.second;
    return {gm.first, psi};
}

std::pair<double, double> OracleSystem::two_lowest() const {
    if (field_dim_ > kDenseLimit)
        throw BudgetError(field_dim_, "two_lowest: needs dense blocks");
    const auto& ep = block_eigen(+1);
    const auto& em = block_eigen(-1);
    std::array<double, 4> lows{ep.values(0), em.values(0),
                               ep.values.size() > 1 ? ep.values(1)
                                                    : std::numeric_limits<double>::infinity(),
                               em.values.size() > 1 ? em.values(1)
                                                    : std::numeric_limits<double>::infinity()};
    std::sort(lows.begin(), lows.end());
    return {lows[0], lows[1]};
}

const OracleSystem::BlockEigen& OracleSystem::block_eigen(int branch) const {
    if (field_dim_ > kDenseLimit)
        throw BudgetError(field_dim_, "block_eigen: field dimension exceeds the dense limit");
    auto& slot = branch == +1 ? eig_plus_ : eig_minus_;
    if (!slot) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense_block(branch));
        if (es.info() != Eigen::Success)
            throw InconclusiveError("block_eigen: eigendecomposition failed");
        auto be = std::make_unique<BlockEigen>();
        be->values = es.eigenvalues();
        be->vectors = es.eigenvectors();
        slot = std::move(be);
    }
    return *slot;
}

Eigen::VectorXcd OracleSystem::evolve(const Eigen::VectorXcd& psi0, double t) const {
    if (static_cast<std::size_t>(psi0.size()) != dim())
        throw DomainError("evolve: dimension mismatch");
    Eigen::VectorXcd out(dim());
    for (int b = 0; b < 2; ++b) {
        const auto& eig = block_eigen(b == 0 ? +1 : -1);
        const auto seg = psi0.segment(b * field_dim_, field_dim_);
        Eigen::VectorXcd coeff = eig.vectors.adjoint() * seg;
        for (Eigen::Index i = 0; i < coeff.size(); ++i)
            coeff(i) *= std::polar(1.0, -eig.values(i) * t);
        out.segment(b * field_dim_, field_dim_) = eig.vectors * coeff;
    }
    return out;
}

OracleSystem converged_system(const DiscreteModes& modes, double delta,
                              const NmaxPolicy& policy) {
    double disp = 0.0;
    for (const auto& m : modes.modes)
        disp = std::max(disp, std::norm(m.c) / (m.omega * m.omega));
    int n = policy.start > 0 ? policy.start : static_cast<int>(std::ceil(4.0 * disp + 10.0));

    auto energy_at = [&](int n_max) {
        OracleSystem sys(modes, delta, n_max, policy.budget);
        return std::min(sys.block_ground(+1).first, sys.block_ground(-1).first);
    };

    ConvergenceRecord rec;
    const int half = std::max(1, n / 2);
    rec.n_max_sweep.push_back(half);
    rec.energies.push_back(energy_at(half));
    for (;;) {
        rec.n_max_sweep.push_back(n);
        rec.energies.push_back(energy_at(n));
        const auto sz = rec.energies.size();
        rec.final_delta = std::abs(rec.energies[sz - 1] - rec.energies[sz - 2]);
        if (rec.final_delta < policy.tol) break;
        n *= 2;  // budget violations surface from the constructor
    }
    OracleSystem sys(modes, delta, n, policy.budget);
    sys.set_convergence(std::move(rec));
    return sys;
}

// ---- expectation values ----------------------------------------------------

void require_truncation_adequate(const OracleSystem& sys, const Eigen::VectorXcd& psi) {
    if (static_cast<std::size_t>(psi.size()) != sys.dim())
        throw DomainError("require_truncation_adequate: dimension mismatch");
    const std::size_t M = sys.modes().size();
    const std::size_t D = sys.field_dim();
    for (std::size_t j = 0; j < M; ++j) {
        double m1 = 0.0, m2 = 0.0;
        for (std::size_t f = 0; f < D; ++f) {
            const double p = std::norm(psi(f)) + std::norm(psi(D + f));
            if (p == 0.0) continue;
            const double nj = sys.occupation(f, j);
            m1 += p * nj;
            m2 += p * nj * nj;
        }
        const double sd = std::sqrt(std::max(m2 - m1 * m1, 0.0));
        if (!(m1 + 5.0 * sd < sys.n_max())) {
            std::ostringstream os;
            os << "truncation inadequate for mode " << j << ": <N>=" << m1 << " sd=" << sd
               << " n_max=" << sys.n_max();
            throw TruncationError(os.str());
        }
    }
}

Eigen::MatrixXcd weyl_matrix(const OracleSystem& sys,
                             const std::vector<std::complex<double>>& g) {
    if (g.size() != sys.modes().size())
        throw DomainError("weyl_matrix: one amplitude per mode required");
    const std::size_t D = sys.field_dim();
    if (D > OracleSystem::kDenseLimit)
        throw BudgetError(D, "weyl_matrix: field dimension exceeds the dense limit");
    // phi(g) = sum_j conj(g_j) a_j + g_j a_j^dagger
    Eigen::MatrixXcd phi = Eigen::MatrixXcd::Zero(D, D);
    for (std::size_t f = 0; f < D; ++f) {
        std::size_t rem = f;
        std::size_t stride = 1;
        for (std::size_t j = 0; j < g.size(); ++j) {
            const int nj = static_cast<int>(rem % (sys.n_max() + 1));
            rem /= (sys.n_max() + 1);
            if (nj < sys.n_max()) {
                const std::size_t up = f + stride;
                const auto amp = g[j] * std::sqrt(nj + 1.0);  // creation
                phi(up, f) += amp;
                phi(f, up) += std::conj(amp);
            }
            stride *= (sys.n_max() + 1);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(phi);
    Eigen::VectorXcd ph(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < ph.size(); ++i)
        ph(i) = std::polar(1.0, es.eigenvalues()(i));
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

std::complex<double> expect_weyl(const OracleSystem& sys, const Eigen::VectorXcd& psi,
                                 const std::vector<std::complex<double>>& g) {
    require_truncation_adequate(sys, psi);
    const auto W = weyl_matrix(sys, g);
    const std::size_t D = sys.field_dim();
    std::complex<double> out{};
    for (int b = 0; b < 2; ++b) {
        const auto seg = psi.segment(b * D, D);
        out += seg.dot(W * seg);  // Eigen dot conjugates the left argument
    }
    return out;
}

std::complex<double> expect_weyl_thermal(const OracleSystem& sys, double beta,
                                         const std::vector<std::complex<double>>& g) {
    if (!(beta > 0.0)) throw DomainError("expect_weyl_thermal: beta must be > 0");
    const auto W = weyl_matrix(sys, g);
    const double shift = std::min(sys.block_eigen(+1).values(0), sys.block_eigen(-1).values(0));
    double Z = 0.0;
    std::complex<double> acc{};
    for (int b = 0; b < 2; ++b) {
        const auto& eig = sys.block_eigen(b == 0 ? +1 : -1);
        for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
            const double w = std::exp(-beta * (eig.values(i) - shift));
            Z += w;
            acc += w * eig.vectors.col(i).dot(W * eig.vectors.col(i));
        }
    }
    return acc / Z;
}

std::complex<double> expect_weyl_thermal_block(const OracleSystem& sys, int branch,
                                               double beta,
                                               const std::vector<std::complex<double>>& g) {
    if (!(beta > 0.0)) throw DomainError("expect_weyl_thermal_block: beta must be > 0");
    const auto W = weyl_matrix(sys, g);
    const auto& eig = sys.block_eigen(branch);
    double Z = 0.0;
    std::complex<double> acc{};
    const double shift = eig.values(0);  // stabilize the exponentials
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        const double w = std::exp(-beta * (eig.values(i) - shift));
        Z += w;
        acc += w * eig.vectors.col(i).dot(W * eig.vectors.col(i));
    }
    return acc / Z;
}

std::complex<double> expect_sigma(const OracleSystem& sys, const Eigen::VectorXcd& psi,
                                  SigmaAxis axis) {
    const std::size_t D = sys.field_dim();
    const auto plus = psi.head(D);
    const auto minus = psi.tail(D);
    switch (axis) {
        case SigmaAxis::X: return plus.squaredNorm() - minus.squaredNorm();
        case SigmaAxis::Z: return 2.0 * plus.dot(minus).real();
        case SigmaAxis::Y: {
            // sigma^y = [[0, i], [-i, 0]] in the |+>, |-> basis
            const std::complex<double> cross = plus.dot(minus);  // <psi_+ | psi_->
            return kI * cross + std::conj(kI * cross);
        }
    }
    throw DomainError("expect_sigma: unknown axis");
}

double expect_number_total(const OracleSystem& sys, const Eigen::VectorXcd& psi) {
    const std::size_t D = sys.field_dim();
    const std::size_t M = sys.modes().size();
    double acc = 0.0;
    for (std::size_t f = 0; f < D; ++f) {
        const double p = std::norm(psi(f)) + std::norm(psi(D + f));
        if (p == 0.0) continue;
        int total = 0;
        for (std::size_t j = 0; j < M; ++j) total += sys.occupation(f, j);
        acc += p * total;
    }
    return acc;
}

Eigen::Matrix2cd qubit_reduced(const OracleSystem& sys, const Eigen::VectorXcd& psi) {
    const std::size_t D = sys.field_dim();
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            rho(a, b) = psi.segment(b * D, D).dot(psi.segment(a * D, D));
    return rho;
}

double entropy_of_qubit(const Eigen::Matrix2cd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
    double s = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double p = es.eigenvalues()(i);
        if (p > 1e-300) s -= p * std::log(p);
    }
    return std::max(s, 0.0);
}

std::vector<double> number_distribution(const OracleSystem& sys,
                                        const Eigen::VectorXcd& psi, int n_hi) {
    const std::size_t D = sys.field_dim();
    const std::size_t M = sys.modes().size();
    std::vector<double> pmf(static_cast<std::size_t>(n_hi) + 1, 0.0);
    for (std::size_t f = 0; f < D; ++f) {
        const double p = std::norm(psi(f)) + std::norm(psi(D + f));
        if (p == 0.0) continue;
        int total = 0;
        for (std::size_t j = 0; j < M; ++j) total += sys.occupation(f, j);
        if (total <= n_hi) pmf[total] += p;
    }
    return pmf;
}

Eigen::VectorXcd product_state(const OracleSystem& sys, int branch,
                               const std::vector<std::complex<double>>& coherent) {
    if (branch != 1 && branch != -1) throw DomainError("product_state: branch must be +1 or -1");
    if (coherent.size() != sys.modes().size())
        throw DomainError("product_state: one coherent amplitude per mode required");
    const std::size_t D = sys.field_dim();
    const std::size_t M = sys.modes().size();

    // per-mode truncated coherent amplitudes
    std::vector<std::vector<std::complex<double>>> amp(M);
    for (std::size_t j = 0; j < M; ++j) {
        amp[j].resize(sys.n_max() + 1);
        const auto a = coherent[j];
        std::complex<double> cur = std::exp(-0.5 * std::norm(a));
        for (int n = 0; n <= sys.n_max(); ++n) {
            amp[j][n] = cur;
            cur *= a / std::sqrt(n + 1.0);
        }
    }
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(2 * D);
    const std::size_t offset = (branch == +1) ? 0 : D;
    for (std::size_t f = 0; f < D; ++f) {
        std::complex<double> v = 1.0;
        std::size_t rem = f;
        for (std::size_t j = 0; j < M; ++j) {
            v *= amp[j][rem % (sys.n_max() + 1)];
            rem /= (sys.n_max() + 1);
        }
        psi(offset + f) = v;
    }
    psi.normalize();
    return psi;
}

Eigen::VectorXcd sigma_z_ground_vacuum(const OracleSystem& sys) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(sys.dim());
    const double inv = 1.0 / std::numbers::sqrt2;
    psi(0) = inv;
    psi(sys.field_dim()) = -inv;
    return psi;
}

} // namespace udw::oracle
