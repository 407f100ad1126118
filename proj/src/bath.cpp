// bath.cpp — Mode sums, continuum kernels and the oscillatory quadrature behind them

#include "bathent/bath.hpp"

#include "bathent/constants.hpp"
#include "bathent/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace bathent {

namespace {

// 1 - cos y without cancellation at small y.
double one_minus_cos(double y) {
    const double h = std::sin(0.5 * y);
    return 2.0 * h * h;
}

// y - sin y; Taylor series where the subtraction would cancel.
double y_minus_sin(double y) {
    if (std::abs(y) < 0.2) {
        const double y2 = y * y;
        double term = y * y2 / 6.0;
        double sum = term;
        for (int k = 5; k <= 13; k += 2) {
            term *= -y2 / (static_cast<double>(k - 1) * k);
            sum += term;
        }
        return sum;
    }
    return y - std::sin(y);
}

// x (coth x - 1) = 2x / (e^{2x} - 1)
double x_coth_excess(double x) {
    if (x < 1e-10) return 1.0 - x;
    return 2.0 * x / std::expm1(2.0 * x);
}

struct Quad {
    double value = 0.0;
    double error = 0.0;

    Quad& operator+=(const Quad& o) {
        value += o.value;
        error += o.error;
        return *this;
    }
};

constexpr std::size_t kMaxPanels = 1u << 16;
// Panels span at most one period, so shallow bisection suffices.
constexpr unsigned kMaxDepth = 6;
constexpr double kTwoPi = 2.0 * si::pi;

template <class G>
Quad gauss_kronrod(G&& g, double a, double b) {
    // Integrate on [-1, 1]: Boost reports the error of the unit-interval rule without rescaling.
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double error = 0.0;
    double l1 = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        [&](double y) { return g(mid + half * y); }, -1.0, 1.0, kMaxDepth, 1e-12, &error, &l1);
    return {half * v, half * error};
}

template <class G>
Quad panel_integral(G&& g, double lo, double hi, double panel) {
    const double span = hi - lo;
    if (!(span > 0.0)) return {};
    const double count = std::ceil(span / panel);
    if (count > static_cast<double>(kMaxPanels)) {
        throw QuadratureFailure("oscillatory quadrature needs more than " + std::to_string(kMaxPanels) +
                                " panels");
    }
    const auto n = std::max<std::size_t>(1, static_cast<std::size_t>(count));
    const double step = span / static_cast<double>(n);
    Quad total;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = lo + step * static_cast<double>(i);
        const double b = (i + 1 == n) ? hi : a + step;
        total += gauss_kronrod(g, a, b);
    }
    return total;
}

// One integrand factor F(x) on [lower, upper]; `feature` bounds the panel length.
struct Piece {
    std::function<double(double)> fn;
    double lower = 0.0;
    double upper = 0.0;
    double feature = 1.0;
};

// One-sided finite-difference derivatives at x = 0.
double first_derivative_at_zero(const Piece& p) {
    const double h = 1e-4 * p.feature;
    return (-3.0 * p.fn(0.0) + 4.0 * p.fn(h) - p.fn(2.0 * h)) / (2.0 * h);
}

double second_derivative_at_zero(const Piece& p) {
    const double h = 1e-3 * p.feature;
    return (2.0 * p.fn(0.0) - 5.0 * p.fn(h) + 4.0 * p.fn(2.0 * h) - p.fn(3.0 * h)) / (h * h);
}

bool resolvable(const Piece& p, double s) {
    const double panel = std::min(kTwoPi / s, p.feature);
    return (p.upper - p.lower) / panel <= static_cast<double>(kMaxPanels);
}

void require_asymptotic_ok(const Piece& p) {
    if (p.lower != 0.0) {
        throw QuadratureFailure("too many oscillations to resolve on an interval not starting at 0");
    }
}

// int F(x) (1 - cos s x) dx
Quad one_minus_cos_integral(const Piece& p, double s) {
    if (resolvable(p, s)) {
        const double panel = std::min(kTwoPi / s, p.feature);
        return panel_integral([&](double x) { return p.fn(x) * one_minus_cos(s * x); }, p.lower, p.upper, panel);
    }
    // int F cos(sx) ~ -F'(0)/s^2 once F and its derivatives vanish at the upper end.
    require_asymptotic_ok(p);
    Quad q = panel_integral(p.fn, p.lower, p.upper, p.feature);
    q.value += first_derivative_at_zero(p) / (s * s);
    return q;
}

// int F(x) (s x - sin s x) dx
Quad x_minus_sin_integral(const Piece& p, double s) {
    if (resolvable(p, s)) {
        const double panel = std::min(kTwoPi / s, p.feature);
        return panel_integral([&](double x) { return p.fn(x) * y_minus_sin(s * x); }, p.lower, p.upper, panel);
    }
    // int F sin(sx) ~ F(0)/s - F''(0)/s^3
    require_asymptotic_ok(p);
    Quad q = panel_integral([&](double x) { return x * p.fn(x); }, p.lower, p.upper, p.feature);
    q.value *= s;
    q.error *= s;
    q.value -= p.fn(0.0) / s - second_derivative_at_zero(p) / (s * s * s);
    return q;
}

// Thermal excess coth(x) - 1 decays like e^{-2x}; e^{-120} is far below double precision.
constexpr double kThermalSupport = 60.0;

Quad thermal_correction(const std::function<double(double)>& w, double lower, double upper, double feature,
                        double s) {
    const double hi = std::min(upper, kThermalSupport);
    if (!(hi > lower)) return {};
    Piece p{[&w](double x) { return x_coth_excess(x) * w(x); }, lower, hi, std::min(feature, 1.0)};
    return one_minus_cos_integral(p, s);
}

void check_accuracy(const Quad& q, double rel_target, const char* what) {
    if (!std::isfinite(q.value) || q.error > rel_target * std::abs(q.value) + 1e-300) {
        throw QuadratureFailure(std::string(what) + ": error estimate " + std::to_string(q.error) +
                                " exceeds target for value " + std::to_string(q.value));
    }
}

} // namespace

// ---------------------------------------------------------------- discrete modes

double thermal_occupation(double omega, double temperature) {
    if (!(omega > 0.0)) throw InvalidArgument("thermal_occupation: omega must be positive");
    if (!(temperature >= 0.0)) throw InvalidArgument("thermal_occupation: temperature must be >= 0");
    if (temperature == 0.0) return 0.0;
    return 1.0 / std::expm1(si::hbar * omega / (si::k_B * temperature));
}

BathMode BathMode::from_coupling(double g, double omega, double mass, double nbar) {
    if (!(omega > 0.0) || !(mass > 0.0)) throw InvalidArgument("BathMode: omega and mass must be positive");
    return {omega, g * g / (2.0 * mass * si::hbar * omega * omega * omega), nbar};
}

BathMode BathMode::thermal(double omega, double weight, double temperature) {
    return {omega, weight, thermal_occupation(omega, temperature)};
}

KernelValue kernel_from_modes(std::span<const BathMode> modes, double t) {
    if (!(t >= 0.0)) throw InvalidArgument("kernel_from_modes: t must be >= 0");
    KernelValue k;
    for (const auto& m : modes) {
        if (!(m.omega > 0.0) || !(m.nbar >= 0.0) || !(m.weight >= 0.0)) {
            throw InvalidArgument("kernel_from_modes: mode needs omega > 0, weight >= 0, nbar >= 0");
        }
        const double wt = m.omega * t;
        k.f += m.weight * (1.0 + 2.0 * m.nbar) * one_minus_cos(wt);
        k.phi += m.weight * y_minus_sin(wt);
    }
    return k;
}

// ---------------------------------------------------------------- continuum

CutoffFunction CutoffFunction::exponential(double x_max) {
    CutoffFunction c;
    c.fn_ = [x_max](double x) { return std::exp(-x / x_max); };
    c.scale_ = x_max;
    c.support_ = 60.0 * x_max;
    c.name_ = "exponential";
    c.exponential_ = true;
    return c;
}

CutoffFunction CutoffFunction::gaussian(double x_max) {
    CutoffFunction c;
    c.fn_ = [x_max](double x) {
        const double r = x / x_max;
        return std::exp(-r * r);
    };
    c.scale_ = x_max;
    c.support_ = 9.0 * x_max;
    c.name_ = "gaussian";
    return c;
}

CutoffFunction CutoffFunction::custom(std::function<double(double)> fn, double scale, double support,
                                      std::string name) {
    if (!fn || !(scale > 0.0) || !(support > 0.0)) {
        throw InvalidArgument("CutoffFunction::custom: needs a function, scale > 0, support > 0");
    }
    CutoffFunction c;
    c.fn_ = std::move(fn);
    c.scale_ = scale;
    c.support_ = support;
    c.name_ = std::move(name);
    return c;
}

ContinuumBath ContinuumBath::exponential(double x_max, double tau, bool coth_approx) {
    return {x_max, tau, CutoffFunction::exponential(x_max), coth_approx};
}

void ContinuumBath::validate() const {
    if (!(x_max > 0.0) || !(tau > 0.0)) throw InvalidArgument("ContinuumBath: x_max and tau must be positive");
    if (std::abs(cutoff(0.0) - 1.0) > 1e-12) throw InvalidArgument("ContinuumBath: cut-off must satisfy c(0) = 1");
}

double closed_form_f(double t, double x_max, double tau) {
    if (!(t >= 0.0) || !(x_max > 0.0) || !(tau > 0.0)) {
        throw InvalidArgument("closed_form_f: needs t >= 0, x_max > 0, tau > 0");
    }
    const double u = t * x_max / tau;
    return x_max * x_max * (1.0 - std::cos(2.0 * std::atan(u)) / (1.0 + u * u));
}

KernelValue continuum_kernel(const ContinuumBath& bath, double t) {
    bath.validate();
    if (!(t >= 0.0)) throw InvalidArgument("continuum_kernel: t must be >= 0");
    if (t == 0.0) return {};
    const double s = t / bath.tau;
    const double mu = bath.x_max;
    const auto& c = bath.cutoff;

    Quad f;
    Quad phi;
    double target = 1e-8;
    if (c.is_exponential()) {
        // Laplace transforms of x e^{-x/mu} and x^2 e^{-x/mu} at complex argument 1/mu - i s.
        const double u = s * mu;
        const double u2 = u * u;
        const double r = u2 / (1.0 + u2);
        f.value = mu * mu * r * (1.0 + 2.0 / (1.0 + u2));
        phi.value = (2.0 * s * mu * mu * mu * mu / 3.0) * r * (3.0 + (7.0 + 3.0 * u2) / ((1.0 + u2) * (1.0 + u2)));
    } else {
        target = 1e-6;
        if (s * mu > 1e8) {
            throw QuadratureFailure("continuum_kernel: t*x_max/tau > 1e8 is beyond the non-exponential cut-off range");
        }
        const double feature = c.scale() / 4.0;
        f = one_minus_cos_integral(Piece{[&c](double x) { return x * c(x); }, 0.0, c.support(), feature}, s);
        const Quad p = x_minus_sin_integral(Piece{[&c](double x) { return x * x * c(x); }, 0.0, c.support(), feature}, s);
        phi.value = p.value / 3.0;
        phi.error = p.error / 3.0;
    }
    if (!bath.coth_approx) {
        const std::function<double(double)> w = [&c](double x) { return c(x); };
        f += thermal_correction(w, 0.0, c.support(), c.scale() / 4.0, s);
    }
    check_accuracy(f, target, "continuum_kernel f");
    check_accuracy(phi, target, "continuum_kernel phi");
    return {f.value, phi.value};
}

KernelValue spectral_integrals(const SpectralWeight& weight, double s, bool coth_approx) {
    if (!weight.fn || !(weight.upper > weight.lower) || !(weight.lower >= 0.0) || !(weight.feature > 0.0)) {
        throw InvalidArgument("spectral_integrals: malformed weight");
    }
    if (!(s >= 0.0)) throw InvalidArgument("spectral_integrals: s must be >= 0");
    if (s == 0.0) return {};
    const auto& w = weight.fn;
    Quad f = one_minus_cos_integral(Piece{[&w](double x) { return x * w(x); }, weight.lower, weight.upper,
                                          weight.feature},
                                    s);
    Quad phi = x_minus_sin_integral(Piece{[&w](double x) { return x * x * w(x); }, weight.lower, weight.upper,
                                          weight.feature},
                                    s);
    phi.value /= 3.0;
    phi.error /= 3.0;
    if (!coth_approx) f += thermal_correction(w, weight.lower, weight.upper, weight.feature, s);
    check_accuracy(f, 1e-8, "spectral_integrals f");
    check_accuracy(phi, 1e-8, "spectral_integrals phi");
    return {f.value, phi.value};
}

// ---------------------------------------------------------------- bath models

std::string_view bath_type(const BathModel& bath) noexcept {
    switch (bath.index()) {
    case 0: return "modes";
    case 1: return "continuum";
    default: return "path";
    }
}

namespace {

struct Validator {
    void operator()(const DiscreteBath& b) const {
        for (const auto& m : b.modes)
            if (!(m.omega > 0.0) || !(m.weight >= 0.0) || !(m.nbar >= 0.0)) {
                throw InvalidArgument("modes bath: each mode needs omega > 0, weight >= 0, nbar >= 0");
            }
    }
    void operator()(const ContinuumModel& b) const {
        b.bath.validate();
        if (!(b.zeta >= 0.0)) throw InvalidArgument("continuum bath: zeta must be >= 0");
    }
    void operator()(const PathBath& b) const {
        if (b.points.empty()) throw InvalidArgument("path bath: no points");
        for (std::size_t i = 0; i < b.points.size(); ++i) {
            const auto& p = b.points[i];
            if (!(p.t >= 0.0) || !(p.f >= 0.0) || !std::isfinite(p.phi)) {
                throw InvalidArgument("path bath: points need t >= 0, f >= 0, finite phi");
            }
            if (i > 0 && !(p.t > b.points[i - 1].t)) throw InvalidArgument("path bath: t must increase strictly");
        }
    }
};

struct Evaluator {
    double t;

    KernelValue operator()(const DiscreteBath& b) const { return kernel_from_modes(b.modes, t); }
    KernelValue operator()(const ContinuumModel& b) const {
        const auto k = continuum_kernel(b.bath, t);
        return {b.zeta * k.f, b.zeta * k.phi};
    }
    KernelValue operator()(const PathBath& b) const {
        const auto& pts = b.points;
        if (t < pts.front().t || t > pts.back().t) {
            throw InvalidArgument("path bath: t = " + std::to_string(t) + " outside tabulated range");
        }
        auto hi = std::upper_bound(pts.begin(), pts.end(), t, [](double v, const PathPoint& p) { return v < p.t; });
        if (hi == pts.end()) return {pts.back().f, pts.back().phi};
        const auto lo = std::prev(hi);
        const double w = (t - lo->t) / (hi->t - lo->t);
        return {lo->f + w * (hi->f - lo->f), lo->phi + w * (hi->phi - lo->phi)};
    }
};

} // namespace

void validate(const BathModel& bath) { std::visit(Validator{}, bath); }

KernelValue kernel_at(const BathModel& bath, double t) {
    if (!(t >= 0.0)) throw InvalidArgument("kernel_at: t must be >= 0");
    return std::visit(Evaluator{t}, bath);
}

} // namespace bathent
