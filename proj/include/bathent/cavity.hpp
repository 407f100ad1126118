// cavity.hpp — Two double-well quantum dots in a perfectly conducting box cavity
//
// Dot A sits at (a/4, b/2, c/2), dot B at (3a/4, b/2, c/2); both dipoles point
// along z with opposite orientation, so only TM modes couple. With odd-m modes
// suppressed, the surviving wave vectors are
//   k = pi ((4 n_x + 2)/a, (2 n_y + 1)/b, 2 n_z / c),
// and every one of them couples symmetrically to sigma_x^A + sigma_x^B.

#pragma once

#include "bathent/bath.hpp"

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace bathent::cavity {

/// Aluminum plasma energy hbar*omega_p in eV.
inline constexpr double kAluminumPlasmaEnergyEv = 15.3;

double plasma_frequency_from_ev(double energy_ev);

/// Plasma cut-off preset by material name; only "aluminum" is known.
double material_plasma_frequency(std::string_view material);

struct CavityConfig {
    double a = 1.0;           // m
    double b = 1.0;           // m
    double c = 1.0;           // m
    double d = 10e-9;         // m, separation of the two wells
    double temperature = 0.1; // K
    double omega_p = plasma_frequency_from_ev(kAluminumPlasmaEnergyEv); // rad/s

    void validate() const;
    double volume() const noexcept { return a * b * c; }
    /// Dipole approximation holds while k_B T < 2 pi hbar c0 / (10 d).
    bool dipole_approximation_valid() const noexcept;
};

struct CavityDerived {
    double zeta = 0.0;  // e^2 d^2 mu0 / (pi^2 c0 hbar^3 beta^2)
    double tau = 0.0;   // beta hbar / 2, seconds
    double x_max = 0.0; // omega_p tau
};

CavityDerived derive_constants(const CavityConfig& cfg);

enum class ModeCoupling {
    Symmetric,     // g_B = -g_A: couples to sigma_x^A + sigma_x^B
    Antisymmetric, // g_B = +g_A: couples to sigma_x^A - sigma_x^B
    Dark,          // node at both dots
};

std::string_view to_string(ModeCoupling kind) noexcept;

struct ModeAmplitudes {
    double g_a = 0.0;           // sin(k_x a/4) sin(k_y b/2) cos(k_z c/2)
    double g_b = 0.0;           // sin(3 k_x a/4) sin(k_y b/2) cos(k_z c/2)
    double common_factor = 0.0; // e d sqrt(mass / (mu0 V)) k_perp / eps0
    ModeCoupling kind = ModeCoupling::Dark;
};

/// TM mode (m, n, p) with k = pi (m/a, n/b, p/c); needs k_perp > 0. `mass` is the
/// formal oscillator mass of the field quantization and cancels from f and phi.
ModeAmplitudes coupling_constants(int m, int n, int p, const CavityConfig& cfg, double mass = 1.0);

struct CavityMode {
    int n_x = 0;
    int n_y = 0;
    int n_z = 0;
    std::array<double, 3> k{}; // 1/m
    double omega = 0.0;        // rad/s

    /// TM indices (m, n, p) = (4 n_x + 2, 2 n_y + 1, 2 n_z)
    std::array<int, 3> tm_indices() const noexcept { return {4 * n_x + 2, 2 * n_y + 1, 2 * n_z}; }
};

inline constexpr std::size_t kDefaultModeBudget = 10'000'000;

/// Surviving modes with omega <= omega_cap, sorted by (omega, n_x, n_y, n_z).
/// Throws InvalidArgument if omega_cap > omega_p and CapTooLarge when the count
/// would exceed `budget`.
std::vector<CavityMode> enumerate_modes(const CavityConfig& cfg, double omega_cap,
                                        std::size_t budget = kDefaultModeBudget);

/// Scale applied to |g_k|^2 from the dipole coupling so that the continuum limit
/// of the mode sum reproduces zeta * f~: the face-value mode sum converges to
/// (zeta/24) int x coth(x) (1 - cos) dx (mode density V/16pi^3 over one octant,
/// angular factor pi/3).
inline constexpr double kModeSumNormalization = 24.0;

/// Discrete-bath weights w_k = N g_k^2 / (2 mass hbar omega_k^3) with thermal occupations.
std::vector<BathMode> mode_bath(const CavityConfig& cfg, std::span<const CavityMode> modes, double mass = 1.0);

/// Continuum description used for the kernel: exponential cut-off at x_max,
/// coth replaced by 1 once x_max >= 1e3.
ContinuumModel continuum_model(const CavityConfig& cfg);

/// zeta * (f~, phi~)
KernelValue cavity_kernel(const CavityConfig& cfg, double t);

} // namespace bathent::cavity
