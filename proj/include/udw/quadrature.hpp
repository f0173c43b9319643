// quadrature.hpp — adaptive Gauss–Kronrod integration shared by every numeric path
//
// Global-adaptive bisection with a 15-point Kronrod rule per panel (embedded
// 7-point Gauss rule for the error estimate).  Semi-infinite tails are mapped
// by k = k0*(1+u)/(1-u).  A composite fixed-panel variant handles strongly
// oscillatory integrands (panels aligned to the oscillation period).

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "udw/errors.hpp"

namespace udw::quad {

struct Tolerances {
    double rel = 1e-9;
    double abs = 1e-14;
    std::size_t max_panels = 10000;
};

template <typename T>
struct Result {
    T value{};
    double error_estimate = 0.0;
    std::size_t panels = 0;
    bool converged = true;
};

namespace detail {

// QUADPACK dqk15 abscissae/weights (positive half, symmetric rule)
inline constexpr double kronrod_nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kronrod_weights[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double gauss_weights[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

inline double norm_of(double v) { return std::abs(v); }
inline double norm_of(const std::complex<double>& v) { return std::abs(v); }

template <typename T, typename F>
void kronrod_panel(const F& f, double a, double b, T& out_k, double& out_err) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    T gauss{};
    T kron = kronrod_weights[7] * f(mid);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kronrod_nodes[i];
        const T sum = f(mid - dx) + f(mid + dx);
        kron += kronrod_weights[i] * sum;
        if (i % 2 == 1) gauss += gauss_weights[i / 2] * sum;
    }
    gauss += gauss_weights[3] * f(mid);
    out_k = kron * half;
    out_err = norm_of((kron - gauss) * half);
}

template <typename T>
struct Panel {
    double a, b;
    T value;
    double err;
};

} // namespace detail

// Adaptive integral of f over the finite interval [a, b].
template <typename T = double, typename F>
Result<T> integrate(const F& f, double a, double b, const Tolerances& tol = {}) {
    Result<T> res;
    if (!(a < b)) return res;

    using P = detail::Panel<T>;
    auto worse = [](const P& x, const P& y) { return x.err < y.err; };
    std::priority_queue<P, std::vector<P>, decltype(worse)> queue(worse);

    P first{a, b, T{}, 0.0};
    detail::kronrod_panel<T>(f, a, b, first.value, first.err);
    queue.push(first);
    std::size_t panels = 1;
    T total = first.value;
    double total_err = first.err;

    while (total_err > std::max(tol.abs, tol.rel * detail::norm_of(total)) &&
           panels < tol.max_panels) {
        P top = queue.top();
        queue.pop();
        const double mid = 0.5 * (top.a + top.b);
        if (mid <= top.a || mid >= top.b) {  // interval exhausted at double precision
            queue.push(top);
            break;
        }
        P left{top.a, mid, T{}, 0.0};
        P right{mid, top.b, T{}, 0.0};
        detail::kronrod_panel<T>(f, left.a, left.b, left.value, left.err);
        detail::kronrod_panel<T>(f, right.a, right.b, right.value, right.err);
        total += left.value + right.value - top.value;
        total_err += left.err + right.err - top.err;
        queue.push(left);
        queue.push(right);
        ++panels;
    }

    // Deterministic final sum: accumulate panels sorted by left endpoint.
    std::vector<P> all;
    all.reserve(queue.size());
    while (!queue.empty()) {
        all.push_back(queue.top());
        queue.pop();
    }
    std::sort(all.begin(), all.end(), [](const P& x, const P& y) { return x.a < y.a; });
    T value{};
    double err = 0.0;
    for (const auto& p : all) {
        value += p.value;
        err += p.err;
    }

    res.value = value;
    res.error_estimate = err;
    res.panels = panels;
    res.converged = err <= std::max(tol.abs, tol.rel * detail::norm_of(value)) ||
                    err <= tol.abs;
    return res;
}

// Integral of f over [k0, inf) via k = k0*(1+u)/(1-u), u in [0, 1).
template <typename T = double, typename F>
Result<T> integrate_tail(const F& f, double k0, const Tolerances& tol = {}) {
    if (k0 <= 0.0) throw DomainError("integrate_tail: tail start must be positive");
    auto mapped = [&f, k0](double u) -> T {
        const double om = 1.0 - u;
        const double k = k0 * (1.0 + u) / om;
        const double jac = 2.0 * k0 / (om * om);
        return f(k) * jac;
    };
    return integrate<T>(mapped, 0.0, 1.0, tol);
}

// Integral over [a, hi] where hi may be infinite; finite head + mapped tail.
template <typename T = double, typename F>
Result<T> integrate_radial(const F& f, double a, double hi, double scale,
                           const Tolerances& tol = {}) {
    if (std::isfinite(hi)) return integrate<T>(f, a, hi, tol);
    const double split = std::max(a, scale);
    Result<T> head;
    if (a < split) head = integrate<T>(f, a, split, tol);
    Result<T> tail = integrate_tail<T>(f, split, tol);
    Result<T> res;
    res.value = head.value + tail.value;
    res.error_estimate = head.error_estimate + tail.error_estimate;
    res.panels = head.panels + tail.panels;
    res.converged = head.converged && tail.converged;
    return res;
}

// Composite Kronrod rule with panels no wider than `max_width`, for integrands
// oscillating with a known period (pass max_width ~ half a period).  Falls
// back to a single adaptive call when few panels are needed.
template <typename T = double, typename F>
Result<T> integrate_oscillatory(const F& f, double a, double b, double max_width,
                                const Tolerances& tol = {}) {
    Result<T> res;
    if (!(a < b)) return res;
    const std::size_t n_raw =
        static_cast<std::size_t>(std::ceil((b - a) / std::max(max_width, 1e-300)));
    if (n_raw <= 32) return integrate<T>(f, a, b, tol);
    const std::size_t n = std::min<std::size_t>(n_raw, 400000);
    const double h = (b - a) / static_cast<double>(n);
    T total{};
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = a + h * static_cast<double>(i);
        const double hi = (i + 1 == n) ? b : lo + h;
        T v{};
        double e = 0.0;
        detail::kronrod_panel<T>(f, lo, hi, v, e);
        total += v;
        err += e;
    }
    res.value = total;
    res.error_estimate = err;
    res.panels = n;
    res.converged = err <= std::max(tol.abs * 10.0, tol.rel * 10.0 * detail::norm_of(total));
    return res;
}

} // namespace udw::quad
