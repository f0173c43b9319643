// coupling.cpp — coupling evaluation and test-function algebra

#include "udw/coupling.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace udw {

double CouplingFunction::value(double k) const {
    if (k < 0.0) throw DomainError("CouplingFunction: negative radial momentum");
    if (lambda_ == 0.0) return 0.0;
    const double w = omega(mode_space_, k);
    if (w == 0.0)
        throw SingularPointError(
            "CouplingFunction: k = 0 is singular for massless dispersion; integrate around it");
    const double norm = std::sqrt(2.0 * std::pow(2.0 * std::numbers::pi, mode_space_.n) * w);
    return lambda_ * profile_.fourier(k) / norm;
}

struct TestFunction::State {
    ModeSpace ms;
    Fn fn;
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    double norm_sq = 0.0;
    bool zero = false;
};

namespace {

double compute_norm_sq(const TestFunction::State& s) {
    const double area = sphere_area(s.ms.n);
    const int n = s.ms.n;
    auto integrand = [&](double k) {
        const double a = std::abs(s.fn(k));
        return area * std::pow(k, n - 1) * a * a;
    };
    auto res = quad::integrate_radial(integrand, s.lo, s.hi, std::max(1.0, s.lo));
    if (!res.converged || !std::isfinite(res.value))
        throw InconclusiveError("TestFunction: L2 norm did not converge (not square integrable?)");
    return res.value;
}

} // namespace

TestFunction::TestFunction(ModeSpace ms, Fn f, double support_min, double support_max) {
    if (support_min < 0.0 || !(support_min < support_max))
        throw DomainError("TestFunction: invalid support interval");
    auto s = std::make_shared<State>();
    s->ms = ms;
    s->fn = std::move(f);
    s->lo = support_min;
    s->hi = support_max;
    s->norm_sq = compute_norm_sq(*s);
    state_ = std::move(s);
}

TestFunction::TestFunction(ModeSpace ms, Fn f, double support_min, double support_max,
                           double known_norm_sq) {
    if (support_min < 0.0 || !(support_min < support_max))
        throw DomainError("TestFunction: invalid support interval");
    if (!(known_norm_sq >= 0.0) || !std::isfinite(known_norm_sq))
        throw DomainError("TestFunction: asserted norm must be finite and nonnegative");
    auto s = std::make_shared<State>();
    s->ms = ms;
    s->fn = std::move(f);
    s->lo = support_min;
    s->hi = support_max;
    s->norm_sq = known_norm_sq;
    state_ = std::move(s);
}

TestFunction TestFunction::zero(ModeSpace ms) {
    auto s = std::make_shared<State>();
    s->ms = ms;
    s->fn = [](double) { return std::complex<double>{}; };
    s->zero = true;
    return TestFunction(std::move(s));
}

std::complex<double> TestFunction::operator()(double k) const {
    if (k < 0.0) throw DomainError("TestFunction: negative radial momentum");
    if (state_->zero || k < state_->lo || k > state_->hi) return {};
    return state_->fn(k);
}

double TestFunction::norm_sq() const { return state_->norm_sq; }
const ModeSpace& TestFunction::mode_space() const { return state_->ms; }
double TestFunction::support_min() const { return state_->lo; }
double TestFunction::support_max() const { return state_->hi; }
bool TestFunction::is_zero() const { return state_->zero; }

TestFunction TestFunction::rotated(double t) const {
    if (state_->zero || t == 0.0) return *this;
    auto s = std::make_shared<State>(*state_);
    auto base = state_;
    s->fn = [base, t](double k) {
        const double w = omega(base->ms, k);
        return base->fn(k) * std::polar(1.0, w * t);
    };
    return TestFunction(std::move(s));  // unitary rotation: norm carried over
}

TestFunction TestFunction::scaled(std::complex<double> c) const {
    if (state_->zero) return *this;
    if (c == std::complex<double>{}) return zero(state_->ms);
    auto s = std::make_shared<State>(*state_);
    auto base = state_;
    s->fn = [base, c](double k) { return c * base->fn(k); };
    s->norm_sq = state_->norm_sq * std::norm(c);
    return TestFunction(std::move(s));
}

TestFunction TestFunction::plus(const TestFunction& other) const {
    if (state_->ms.n != other.state_->ms.n)
        throw DomainError("TestFunction: dimension mismatch in sum");
    if (other.state_->zero) return *this;
    if (state_->zero) return other;
    auto a = state_;
    auto b = other.state_;
    auto sum = [a, b](double k) {
        std::complex<double> v{};
        if (k >= a->lo && k <= a->hi) v += a->fn(k);
        if (k >= b->lo && k <= b->hi) v += b->fn(k);
        return v;
    };
    return TestFunction(a->ms, sum, std::min(a->lo, b->lo), std::max(a->hi, b->hi));
}

std::complex<double> pairing(const TestFunction& f, const TestFunction& g,
                             const quad::Tolerances& tol) {
    if (f.mode_space().n != g.mode_space().n)
        throw DomainError("pairing: dimension mismatch");
    if (f.is_zero() || g.is_zero()) return {};
    const double lo = std::max(f.support_min(), g.support_min());
    const double hi = std::min(f.support_max(), g.support_max());
    if (!(lo < hi)) return {};
    const int n = f.mode_space().n;
    const double area = sphere_area(n);
    auto integrand = [&](double k) {
        return area * std::pow(k, n - 1) * std::conj(f(k)) * g(k);
    };
    auto res = quad::integrate_radial<std::complex<double>>(integrand, lo, hi,
                                                            std::max(1.0, lo), tol);
    if (!res.converged)
        throw InconclusiveError("pairing: quadrature did not converge");
    return res.value;
}

} // namespace udw
