// bath.hpp — Decoherence functions f(t), phi(t) for harmonic heat baths
//
// Three descriptions are supported: an explicit list of oscillator modes, a
// thermal continuum with a cut-off in the dimensionless frequency
// x = beta*hbar*omega/2 = omega*tau, and a tabulated (t, f, phi) path.

#pragma once

#include "bathent/states.hpp"

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bathent {

// ---------------------------------------------------------------- discrete modes

/// Bose-Einstein occupation 1/(exp(hbar*omega/(k_B*T)) - 1); 0 at T = 0.
double thermal_occupation(double omega, double temperature);

struct BathMode {
    double omega = 1.0;  // rad/s
    double weight = 0.0; // w = g^2 / (2 m hbar omega^3), dimensionless
    double nbar = 0.0;

    /// Builds the weight from a raw coupling constant and the formal oscillator mass.
    static BathMode from_coupling(double g, double omega, double mass, double nbar);
    static BathMode thermal(double omega, double weight, double temperature);
};

/// f = sum w (1 + 2 nbar)(1 - cos wt),  phi = sum w (wt - sin wt)
KernelValue kernel_from_modes(std::span<const BathMode> modes, double t);

// ---------------------------------------------------------------- continuum

class CutoffFunction {
public:
    /// exp(-x / x_max)
    static CutoffFunction exponential(double x_max);
    /// exp(-(x / x_max)^2)
    static CutoffFunction gaussian(double x_max);
    /// Arbitrary c(x) with c(0) = 1, negligible beyond `support`; `scale` is the
    /// length over which it varies.
    static CutoffFunction custom(std::function<double(double)> fn, double scale, double support,
                                 std::string name);

    double operator()(double x) const { return fn_(x); }
    bool is_exponential() const noexcept { return exponential_; }
    double scale() const noexcept { return scale_; }
    double support() const noexcept { return support_; }
    std::string_view name() const noexcept { return name_; }

private:
    std::function<double(double)> fn_;
    double scale_ = 1.0;
    double support_ = 1.0;
    std::string name_;
    bool exponential_ = false;
};

struct ContinuumBath {
    double x_max = 1.0; // omega_cutoff * tau
    double tau = 1.0;   // beta*hbar/2, seconds
    CutoffFunction cutoff = CutoffFunction::exponential(1.0);
    bool coth_approx = false; // replace coth(x) by 1

    static ContinuumBath exponential(double x_max, double tau, bool coth_approx = false);
    void validate() const;
};

/// Dimensionless continuum kernels with s = t/tau:
///   f~   = int_0^inf x coth(x) c(x) (1 - cos(s x)) dx
///   phi~ = (1/3) int_0^inf x^2 c(x) (s x - sin(s x)) dx
/// Target accuracy 1e-8 relative (1e-6 for non-exponential cut-offs);
/// throws QuadratureFailure when it cannot be met.
KernelValue continuum_kernel(const ContinuumBath& bath, double t);

/// x_max^2 (1 - cos(2 arctan(t x_max / tau)) / (1 + t^2 x_max^2 / tau^2))
double closed_form_f(double t, double x_max, double tau);

/// A spectral weight w(x) living on [lower, upper] with structure no finer than `feature`.
struct SpectralWeight {
    std::function<double(double)> fn;
    double lower = 0.0;
    double upper = 1.0;
    double feature = 1.0;
};

/// The same two integrals as continuum_kernel for an arbitrary weight w(x) in
/// place of c(x), at dimensionless time s. Oscillatory quadrature: panels no
/// longer than one period of cos(s x); for very many periods (and lower == 0)
/// the oscillating part is replaced by its endpoint asymptotic expansion.
KernelValue spectral_integrals(const SpectralWeight& weight, double s, bool coth_approx);

// ---------------------------------------------------------------- bath models

struct DiscreteBath {
    std::vector<BathMode> modes;
};

struct ContinuumModel {
    ContinuumBath bath;
    double zeta = 1.0; // f = zeta * f~, phi = zeta * phi~
};

struct PathPoint {
    double t = 0.0;
    double f = 0.0;
    double phi = 0.0;
};

/// Tabulated kernel path, linearly interpolated; t must be strictly increasing.
struct PathBath {
    std::vector<PathPoint> points;
};

using BathModel = std::variant<DiscreteBath, ContinuumModel, PathBath>;

std::string_view bath_type(const BathModel& bath) noexcept;

/// Throws InvalidArgument for malformed models (empty path, unsorted times, ...).
void validate(const BathModel& bath);

KernelValue kernel_at(const BathModel& bath, double t);

} // namespace bathent
