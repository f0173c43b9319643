// dynamics.cpp — Lemma-1 kernels, evolved observables, quasifree expectations

#include "udw/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "udw/diagnostics.hpp"

namespace udw::dyn {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

DivergenceError::End to_error_end(diag::End e) {
    return e == diag::End::IR ? DivergenceError::End::IR : DivergenceError::End::UV;
}

// Integral of f over [lo, hi] where f carries a trig factor with frequency
// ~ |t| in omega (d omega/dk <= 1, so k-panels of half a period suffice).
template <typename T>
T oscillatory_radial(const std::function<T(double)>& f, double lo, double hi, double t,
                     const quad::Tolerances& tol = {}) {
    const double width =
        (std::abs(t) > 0.0) ? std::numbers::pi / (2.0 * std::abs(t))
                            : std::numeric_limits<double>::infinity();
    if (std::isfinite(hi)) {
        const auto res = quad::integrate_oscillatory<T>(f, lo, hi, width, tol);
        if (!res.converged)
            throw InconclusiveError("dynamics: oscillatory quadrature did not converge");
        return res.value;
    }
    // Infinite tail: head + doubling chunks until two consecutive chunks are
    // negligible (the density decays superpolynomially under UV regularity).
    const double head_hi = std::max(1.0, 2.0 * lo);
    T total{};
    double err = 0.0;
    {
        const auto head = quad::integrate_oscillatory<T>(f, lo, head_hi, width, tol);
        total = head.value;
        err = head.error_estimate;
    }
    double a = head_hi;
    int small_streak = 0;
    for (int i = 0; i < 48 && small_streak < 2; ++i) {
        const double b = 2.0 * a;
        const auto chunk = quad::integrate_oscillatory<T>(f, a, b, width, tol);
        total += chunk.value;
        err += chunk.error_estimate;
        a = b;
        if (std::abs(chunk.value) <= std::max(tol.abs, 0.05 * tol.rel * std::abs(total)))
            ++small_streak;
        else
            small_streak = 0;
    }
    if (small_streak < 2)
        throw InconclusiveError("dynamics: oscillatory tail did not settle");
    return total;
}

struct Support {
    double lo, hi;
    bool empty() const { return !(lo < hi); }
};

Support coupling_support(const CouplingFunction& c) {
    return {c.profile().support_min(), c.profile().support_max()};
}

} // namespace

bool EvolvedWeylObservable::is_hermitian_pattern(double tol) const {
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const auto& a = entry(i, j);
            const auto& b = entry(j, i);
            const auto amp_a = a.amplitude * std::polar(1.0, a.phase);
            const auto amp_b = b.amplitude * std::polar(1.0, b.phase);
            if (std::abs(amp_a - std::conj(amp_b)) > tol) return false;
            if (a.vanishes()) continue;
            // arguments must be mutual negations; spot check on a small grid
            if (!a.argument != !b.argument) return false;
            if (a.argument && b.argument) {
                for (double k : {0.25, 0.75, 1.5, 3.0}) {
                    if (std::abs((*a.argument)(k) + (*b.argument)(k)) > tol) return false;
                }
            }
        }
    }
    return true;
}

void require_gapless(const DetectorParams& d) {
    if (d.omega_gap != 0.0)
        throw UnsupportedError(
            "dynamics: exact results hold only for zero gap (omega_gap = 0); "
            "nonzero detuning delta is allowed");
}

std::complex<double> mode_amplitude(const CouplingFunction& coupling, double k, double t) {
    const double w = omega(coupling.mode_space(), k);
    if (w == 0.0)
        throw SingularPointError("mode_amplitude: omega = 0 is a singular point");
    const double fk = coupling.with_lambda(1.0).value(k);
    // 1 - e^{-i w t} = 2 sin^2(wt/2) + i sin(wt), stable for small wt
    const double half = 0.5 * w * t;
    const double s = std::sin(half);
    const std::complex<double> one_minus(2.0 * s * s, std::sin(w * t));
    return -kI * (fk / w) * one_minus;
}

double theta_phase(const CouplingFunction& coupling, double t) {
    if (t == 0.0 || coupling.lambda() == 0.0) return 0.0;
    const auto r1 = diag::r_integral(coupling, 1, diag::Region::full());
    if (!r1.finite)
        throw DivergenceError(to_error_end(r1.end), r1.local_exponent,
                              "theta_phase: R_1 divergent, the -wt term does not converge");
    const auto sup = coupling_support(coupling);
    if (sup.empty()) return 0.0;
    const auto rho2 = diag::radial_density(coupling, 2);
    const ModeSpace ms = coupling.mode_space();
    std::function<double(double)> osc = [rho2, ms, t](double k) {
        return rho2(k) * std::sin(omega(ms, k) * t);
    };
    const double sin_part = oscillatory_radial<double>(osc, sup.lo, sup.hi, t);
    return sin_part - t * r1.value;
}

double mean_boson_number(const CouplingFunction& coupling, double t) {
    if (t == 0.0 || coupling.lambda() == 0.0) return 0.0;
    const auto sup = coupling_support(coupling);
    if (sup.empty()) return 0.0;
    const auto rho2 = diag::radial_density(coupling, 2);
    const ModeSpace ms = coupling.mode_space();
    // 2 - 2 cos(wt) = 4 sin^2(wt/2): nonnegative and IR-cancelling
    std::function<double(double)> f = [rho2, ms, t](double k) {
        const double s = std::sin(0.5 * omega(ms, k) * t);
        return rho2(k) * 4.0 * s * s;
    };
    const double v = oscillatory_radial<double>(f, sup.lo, sup.hi, t);
    return std::max(v, 0.0);
}

double weyl_phase(const CouplingFunction& coupling, const TestFunction& g, double t) {
    if (t == 0.0 || coupling.lambda() == 0.0 || g.is_zero()) return 0.0;
    const auto sup = coupling_support(coupling);
    const double lo = std::max(sup.lo, g.support_min());
    const double hi = std::min(sup.hi, g.support_max());
    if (!(lo < hi)) return 0.0;
    const ModeSpace ms = coupling.mode_space();
    const double area = sphere_area(ms.n);
    const int n = ms.n;
    const double lam = coupling.lambda();
    const CouplingFunction unit = coupling.with_lambda(1.0);
    std::function<std::complex<double>(double)> f =
        [&unit, g, ms, area, n, lam, t](double k) -> std::complex<double> {
        if (k <= 0.0) return {};
        const std::complex<double> ft = mode_amplitude(unit, k, t);
        return area * std::pow(k, n - 1) * std::conj(2.0 * lam * ft) * g(k);
    };
    const std::complex<double> inner = oscillatory_radial<std::complex<double>>(f, lo, hi, t);
    return -inner.imag();
}

EvolvedWeylObservable evolve_weyl(const CouplingFunction& coupling, const TestFunction& g,
                                  double t) {
    const double phi = weyl_phase(coupling, g, t);
    const TestFunction rotated = g.rotated(t);
    EvolvedWeylObservable obs;
    obs.entry(0, 0) = {1.0, rotated, +phi};
    obs.entry(1, 1) = {1.0, rotated, -phi};
    return obs;
}

namespace {

// 2 lambda F(t) as a test function; norm known from N(t) = lambda^2 |F(t)|^2.
TestFunction dressing_argument(const CouplingFunction& coupling, double t, double sign) {
    const auto sup = coupling_support(coupling);
    if (coupling.lambda() == 0.0 || t == 0.0 || sup.empty())
        return TestFunction::zero(coupling.mode_space());
    const CouplingFunction unit = coupling.with_lambda(1.0);
    const double pref = sign * 2.0 * coupling.lambda();
    auto fn = [unit, pref, t](double k) { return pref * mode_amplitude(unit, k, t); };
    const double known_norm = 4.0 * mean_boson_number(coupling, t);
    return TestFunction(coupling.mode_space(), fn, sup.lo, sup.hi, known_norm);
}

} // namespace

EvolvedWeylObservable evolve_sigma(const CouplingFunction& coupling, Axis axis, double t) {
    EvolvedWeylObservable obs;
    switch (axis) {
        case Axis::X:
            obs.entry(0, 0) = {+1.0, std::nullopt, 0.0};
            obs.entry(1, 1) = {-1.0, std::nullopt, 0.0};
            return obs;
        case Axis::Z: {
            const auto plus = dressing_argument(coupling, t, +1.0);
            const auto minus = dressing_argument(coupling, t, -1.0);
            obs.entry(0, 1) = {1.0, plus.is_zero() ? std::nullopt : std::optional(plus), 0.0};
            obs.entry(1, 0) = {1.0, minus.is_zero() ? std::nullopt : std::optional(minus), 0.0};
            return obs;
        }
        case Axis::Y: {
            // sigma^y = i sigma^x sigma^z; sigma^x is diagonal (+1, -1)
            const auto plus = dressing_argument(coupling, t, +1.0);
            const auto minus = dressing_argument(coupling, t, -1.0);
            obs.entry(0, 1) = {kI, plus.is_zero() ? std::nullopt : std::optional(plus), 0.0};
            obs.entry(1, 0) = {-kI, minus.is_zero() ? std::nullopt : std::optional(minus), 0.0};
            return obs;
        }
    }
    throw DomainError("evolve_sigma: unknown axis");
}

JointGroundState JointGroundState::from_delta_sign(double delta) {
    // Prop.-1 ground sits in branch -sign(delta); delta = 0 picks + by convention.
    return {delta > 0.0 ? -1 : +1};
}

ProductInitialState::ProductInitialState(Eigen::Matrix2cd rho, FieldState f)
    : qubit_pm(std::move(rho)), field(std::move(f)) {
    if ((qubit_pm - qubit_pm.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw DomainError("ProductInitialState: qubit density matrix must be Hermitian");
    if (std::abs(qubit_pm.trace().real() - 1.0) > 1e-12 ||
        std::abs(qubit_pm.trace().imag()) > 1e-12)
        throw DomainError("ProductInitialState: qubit density matrix must have unit trace");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(qubit_pm);
    if (es.eigenvalues().minCoeff() < -1e-12)
        throw DomainError("ProductInitialState: qubit density matrix must be PSD");
}

ProductInitialState ProductInitialState::sigma_z_ground_vacuum() {
    Eigen::Matrix2cd rho;
    rho << 0.5, -0.5, -0.5, 0.5;
    return ProductInitialState(rho, VacuumState{});
}

namespace {

// <W(g)> in the field functional attached to qubit branch (+1 for row/col 0).
std::complex<double> field_weyl(const CouplingFunction& coupling, const FieldState& f,
                                const TestFunction& g) {
    return std::visit(
        [&](const auto& s) -> std::complex<double> {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, VacuumState>) {
                return std::exp(-0.5 * g.norm_sq());
            } else if constexpr (std::is_same_v<S, CoherentState>) {
                const auto p = pairing(s.amplitude, g);
                return std::exp(-0.5 * g.norm_sq()) * std::polar(1.0, 2.0 * p.real());
            } else {
                return thermal::kms_weyl(coupling, s.beta, s.branch, g);
            }
        },
        f);
}

std::complex<double> entry_value(const CouplingFunction& coupling, const WeylEntry& e,
                                 const std::function<std::complex<double>(const TestFunction&)>&
                                     weyl_functional) {
    if (e.vanishes()) return {};
    const std::complex<double> scalar = e.amplitude * std::polar(1.0, e.phase);
    if (!e.argument || e.argument->is_zero()) return scalar;  // W(0) = identity
    return scalar * weyl_functional(*e.argument);
}

} // namespace

std::complex<double> state_expectation(const CouplingFunction& coupling,
                                       const StateSpec& state,
                                       const EvolvedWeylObservable& obs) {
    using C = std::complex<double>;
    const int branches[2] = {+1, -1};

    auto diagonal_sum = [&](auto&& weight_of_branch, auto&& functional_of_branch) -> C {
        C total{};
        for (int i = 0; i < 2; ++i) {
            const double w = weight_of_branch(branches[i]);
            if (w == 0.0) continue;
            const auto& e = obs.entry(i, i);
            if (e.vanishes()) continue;
            total += w * entry_value(coupling, e, functional_of_branch(branches[i]));
        }
        return total;
    };

    return std::visit(
        [&](const auto& s) -> C {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, VacuumState> || std::is_same_v<S, CoherentState>) {
                // field state with maximally mixed qubit: weights (1/2, 1/2)
                auto functional = [&](int) {
                    return [&](const TestFunction& g) { return field_weyl(coupling, FieldState{s}, g); };
                };
                return diagonal_sum([](int) { return 0.5; }, functional);
            } else if constexpr (std::is_same_v<S, KmsState>) {
                // qubit pinned to the branch, field thermally displaced with it
                auto functional = [&](int b) {
                    return [&, b](const TestFunction& g) {
                        return thermal::kms_weyl(coupling, s.beta, b, g);
                    };
                };
                return diagonal_sum([&](int b) { return b == s.branch ? 1.0 : 0.0; },
                                    functional);
            } else if constexpr (std::is_same_v<S, JointGroundState>) {
                auto functional = [&](int b) {
                    return [&, b](const TestFunction& g) {
                        return thermal::ground_weyl(coupling, b, g);
                    };
                };
                return diagonal_sum([&](int b) { return b == s.branch ? 1.0 : 0.0; },
                                    functional);
            } else if constexpr (std::is_same_v<S, JointThermalState>) {
                auto functional = [&](int b) {
                    return [&, b](const TestFunction& g) {
                        return thermal::kms_weyl(coupling, s.beta, b, g);
                    };
                };
                return diagonal_sum(
                    [&](int b) { return thermal::branch_weight(s.beta, s.delta, b); },
                    functional);
            } else {
                // Product state rho (x) omega_F: omega_ij = rho_ji * omega_F
                static_assert(std::is_same_v<S, ProductInitialState>);
                auto functional = [&](const TestFunction& g) {
                    return field_weyl(coupling, s.field, g);
                };
                C total{};
                for (int i = 0; i < 2; ++i) {
                    for (int j = 0; j < 2; ++j) {
                        const auto& e = obs.entry(i, j);
                        if (e.vanishes()) continue;
                        const C w = s.qubit_pm(j, i);
                        if (w == C{}) continue;
                        total += w * entry_value(coupling, e, functional);
                    }
                }
                return total;
            }
        },
        state);
}

ReducedQubit reduced_qubit(const CouplingFunction& coupling,
                           const ProductInitialState& initial, double t) {
    if (!std::holds_alternative<VacuumState>(initial.field))
        throw UnsupportedError(
            "reduced_qubit: exact reduced dynamics requires a vacuum initial field sector");
    ReducedQubit out;
    out.gamma = 2.0 * mean_boson_number(coupling, t);
    const double damp = std::exp(-out.gamma);
    out.rho_pm = initial.qubit_pm;
    out.rho_pm(0, 1) *= damp;
    out.rho_pm(1, 0) *= damp;

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(out.rho_pm);
    double entropy = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double p = es.eigenvalues()(i);
        if (p > 1e-300) entropy -= p * std::log(p);
    }
    out.entropy = std::max(entropy, 0.0);
    return out;
}

void TimeSeries::push(double t, std::complex<double> v) {
    if (!times.empty() && t <= times.back())
        throw DomainError("TimeSeries: times must be strictly increasing");
    times.push_back(t);
    values.push_back(v);
}

} // namespace udw::dyn
