// profile.cpp — spatial profile families, tabulated interpolation, CSV loader

#include "udw/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace udw {

struct SpatialProfile::Impl {
    Family family;
    double param = 0.0;                // sigma / rho / cutoff / exponent
    std::shared_ptr<const Impl> base;  // PowerRegularized
    // Tabulated samples and precomputed monotone-cubic (Fritsch–Carlson) slopes
    std::vector<double> tk, tv, td;
};

namespace {

// Fritsch–Carlson monotone cubic slopes: preserves local monotonicity, no ringing.
std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> d(n, 0.0);
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }
    d[0] = delta[0];
    d[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    auto clamp_end = [](double& di, double del) {
        if (del == 0.0 || di * del < 0.0) di = 0.0;
        else if (std::abs(di) > 3.0 * std::abs(del)) di = 3.0 * del;
    };
    clamp_end(d[0], delta[0]);
    clamp_end(d[n - 1], delta[n - 2]);
    return d;
}

} // namespace

namespace detail_profile {

double eval(const SpatialProfile::Impl& p, double k);

double pchip_eval(const SpatialProfile::Impl& p, double k) {
    const auto& x = p.tk;
    const auto& y = p.tv;
    const auto& d = p.td;
    auto it = std::upper_bound(x.begin(), x.end(), k);
    std::size_t i = (it == x.begin()) ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
    if (i + 1 >= x.size()) i = x.size() - 2;
    const double h = x[i + 1] - x[i];
    const double t = (k - x[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y[i] + (t3 - 2 * t2 + t) * h * d[i] +
           (-2 * t3 + 3 * t2) * y[i + 1] + (t3 - t2) * h * d[i + 1];
}

double eval(const SpatialProfile::Impl& p, double k) {
    using Family = SpatialProfile::Family;
    switch (p.family) {
        case Family::Gaussian:
            return std::exp(-0.5 * p.param * p.param * k * k);
        case Family::Lorentzian:
            return std::exp(-p.param * k);
        case Family::CompactBump: {
            const double x = k * p.param;
            if (x < 1e-4) return 1.0 - 0.1 * x * x;  // series, avoids 0/0
            return 3.0 * (std::sin(x) - x * std::cos(x)) / (x * x * x);
        }
        case Family::Pointlike:
            return (k <= p.param) ? 1.0 : 0.0;
        case Family::PowerRegularized:
            return std::pow(k, p.param) * eval(*p.base, k);
        case Family::Tabulated:
            if (k < p.tk.front() || k > p.tk.back())
                throw DomainError(
                    "SpatialProfile: tabulated query outside sample range (no extrapolation)");
            return pchip_eval(p, k);
    }
    throw DomainError("SpatialProfile: unknown family");
}

double support_max(const SpatialProfile::Impl& p) {
    using Family = SpatialProfile::Family;
    switch (p.family) {
        case Family::Pointlike: return p.param;
        case Family::Tabulated: return p.tk.back();
        case Family::PowerRegularized: return support_max(*p.base);
        default: return std::numeric_limits<double>::infinity();
    }
}

double support_min(const SpatialProfile::Impl& p) {
    using Family = SpatialProfile::Family;
    if (p.family == Family::Tabulated) return p.tk.front();
    if (p.family == Family::PowerRegularized) return support_min(*p.base);
    return 0.0;
}

} // namespace detail_profile

SpatialProfile SpatialProfile::gaussian(double sigma) {
    if (!(sigma > 0.0)) throw DomainError("SpatialProfile: Gaussian width must be > 0");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::Gaussian;
    impl->param = sigma;
    return SpatialProfile(std::move(impl));
}

SpatialProfile SpatialProfile::lorentzian(double sigma) {
    if (!(sigma > 0.0)) throw DomainError("SpatialProfile: Lorentzian width must be > 0");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::Lorentzian;
    impl->param = sigma;
    return SpatialProfile(std::move(impl));
}

SpatialProfile SpatialProfile::compact_bump(double rho) {
    if (!(rho > 0.0)) throw DomainError("SpatialProfile: bump radius must be > 0");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::CompactBump;
    impl->param = rho;
    return SpatialProfile(std::move(impl));
}

SpatialProfile SpatialProfile::pointlike(double cutoff) {
    if (!(cutoff > 0.0)) throw DomainError("SpatialProfile: UV cutoff must be > 0");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::Pointlike;
    impl->param = cutoff;
    return SpatialProfile(std::move(impl));
}

SpatialProfile SpatialProfile::power_regularized(double exponent, SpatialProfile base) {
    if (exponent < 0.0) throw DomainError("SpatialProfile: regularization exponent must be >= 0");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::PowerRegularized;
    impl->param = exponent;
    impl->base = base.impl_;
    return SpatialProfile(std::move(impl));
}

SpatialProfile SpatialProfile::tabulated(std::vector<double> k, std::vector<double> value) {
    if (k.size() != value.size() || k.size() < 2)
        throw DomainError("SpatialProfile: tabulated profile needs >= 2 matching samples");
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] < 0.0 || !std::isfinite(value[i]))
            throw DomainError("SpatialProfile: tabulated samples must have k >= 0 and finite values");
        if (i > 0 && k[i] <= k[i - 1])
            throw DomainError("SpatialProfile: tabulated k samples must be strictly increasing");
    }
    auto impl = std::make_shared<Impl>();
    impl->family = Family::Tabulated;
    impl->td = pchip_slopes(k, value);
    impl->tk = std::move(k);
    impl->tv = std::move(value);
    return SpatialProfile(std::move(impl));
}

SpatialProfile SpatialProfile::tabulated_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("SpatialProfile: cannot open CSV file " + path);
    std::vector<double> k, v;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double kk, vv;
        if (!(row >> kk >> vv))
            throw ConfigError("SpatialProfile: malformed CSV row " + std::to_string(lineno) +
                              " in " + path);
        k.push_back(kk);
        v.push_back(vv);
    }
    return tabulated(std::move(k), std::move(v));
}

double SpatialProfile::fourier(double k) const {
    if (k < 0.0) throw DomainError("SpatialProfile: negative radial momentum");
    return detail_profile::eval(*impl_, k);
}

double SpatialProfile::support_min() const { return detail_profile::support_min(*impl_); }
double SpatialProfile::support_max() const { return detail_profile::support_max(*impl_); }
SpatialProfile::Family SpatialProfile::family() const { return impl_->family; }
double SpatialProfile::parameter() const { return impl_->param; }

SpatialProfile SpatialProfile::base_profile() const {
    if (impl_->family != Family::PowerRegularized || !impl_->base)
        throw DomainError("SpatialProfile: base_profile is only defined for PowerRegularized");
    return SpatialProfile(impl_->base);
}

} // namespace udw
