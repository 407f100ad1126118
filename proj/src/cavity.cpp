// cavity.cpp — Cavity geometry, TM mode selection and SI-derived bath parameters

#include "bathent/cavity.hpp"

#include "bathent/constants.hpp"
#include "bathent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

namespace bathent::cavity {

double plasma_frequency_from_ev(double energy_ev) { return energy_ev * si::electron_volt / si::hbar; }

double material_plasma_frequency(std::string_view material) {
    if (material == "aluminum" || material == "aluminium") return plasma_frequency_from_ev(kAluminumPlasmaEnergyEv);
    throw InvalidArgument("unknown cavity material '" + std::string(material) + "'");
}

void CavityConfig::validate() const {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0) || !(d > 0.0)) {
        throw InvalidArgument("CavityConfig: lengths a, b, c, d must be positive");
    }
    if (!(temperature > 0.0)) throw InvalidArgument("CavityConfig: temperature must be positive");
    if (!(omega_p > 0.0)) throw InvalidArgument("CavityConfig: plasma frequency must be positive");
}

bool CavityConfig::dipole_approximation_valid() const noexcept {
    return si::k_B * temperature < 2.0 * si::pi * si::hbar * si::c_0 / (10.0 * d);
}

CavityDerived derive_constants(const CavityConfig& cfg) {
    cfg.validate();
    const double beta = 1.0 / (si::k_B * cfg.temperature);
    CavityDerived out;
    out.zeta = si::e * si::e * cfg.d * cfg.d * si::mu_0 /
               (si::pi * si::pi * si::c_0 * si::hbar * si::hbar * si::hbar * beta * beta);
    out.tau = 0.5 * beta * si::hbar;
    out.x_max = cfg.omega_p * out.tau;
    return out;
}

std::string_view to_string(ModeCoupling kind) noexcept {
    switch (kind) {
    case ModeCoupling::Symmetric: return "symmetric";
    case ModeCoupling::Antisymmetric: return "antisymmetric";
    case ModeCoupling::Dark: return "dark";
    }
    return "unknown";
}

ModeAmplitudes coupling_constants(int m, int n, int p, const CavityConfig& cfg, double mass) {
    cfg.validate();
    if (m < 0 || n < 0 || p < 0) throw InvalidArgument("coupling_constants: mode indices must be >= 0");
    if (m == 0 && n == 0) throw InvalidArgument("coupling_constants: k_perp = 0 has no TM mode");
    if (!(mass > 0.0)) throw InvalidArgument("coupling_constants: mass must be positive");

    const double kx = si::pi * m / cfg.a;
    const double ky = si::pi * n / cfg.b;
    const double k_perp = std::hypot(kx, ky);

    // Phases are exact multiples of pi/4; evaluate through the integer index to
    // keep nodes at exactly zero.
    const auto sin_quarter = [](long q) { // sin(q pi / 4)
        static constexpr double table[8] = {0.0, 0.70710678118654752, 1.0, 0.70710678118654752,
                                            0.0, -0.70710678118654752, -1.0, -0.70710678118654752};
        return table[((q % 8) + 8) % 8];
    };
    const double s = sin_quarter(2L * n) * sin_quarter(2L * p + 2); // sin(n pi/2) cos(p pi/2)

    ModeAmplitudes out;
    out.g_a = sin_quarter(m) * s;
    out.g_b = sin_quarter(3L * m) * s;
    out.common_factor = si::e * cfg.d * std::sqrt(mass / (si::mu_0 * cfg.volume())) * k_perp / si::epsilon_0;
    if (out.g_a == 0.0 && out.g_b == 0.0) {
        out.kind = ModeCoupling::Dark;
    } else if (out.g_b == -out.g_a) {
        out.kind = ModeCoupling::Symmetric;
    } else {
        out.kind = ModeCoupling::Antisymmetric;
    }
    return out;
}

std::vector<CavityMode> enumerate_modes(const CavityConfig& cfg, double omega_cap, std::size_t budget) {
    cfg.validate();
    if (!(omega_cap >= 0.0)) throw InvalidArgument("enumerate_modes: omega_cap must be >= 0");
    if (omega_cap > cfg.omega_p) throw InvalidArgument("enumerate_modes: omega_cap exceeds the plasma cut-off");

    const double k_cap = omega_cap / si::c_0;
    // Weyl estimate: octant volume (pi/6) k^3 over cell volume 16 pi^3 / V.
    const double estimate = cfg.volume() * k_cap * k_cap * k_cap / (96.0 * si::pi * si::pi);
    if (estimate > static_cast<double>(budget)) {
        throw CapTooLarge("enumerate_modes: about " + std::to_string(static_cast<long long>(estimate)) +
                          " modes exceed the budget of " + std::to_string(budget));
    }

    std::vector<CavityMode> modes;
    const double k_cap2 = k_cap * k_cap;
    for (int nx = 0;; ++nx) {
        const double kx = si::pi * (4.0 * nx + 2.0) / cfg.a;
        if (kx * kx > k_cap2) break;
        for (int ny = 0;; ++ny) {
            const double ky = si::pi * (2.0 * ny + 1.0) / cfg.b;
            const double kxy2 = kx * kx + ky * ky;
            if (kxy2 > k_cap2) break;
            for (int nz = 0;; ++nz) {
                const double kz = si::pi * (2.0 * nz) / cfg.c;
                const double k2 = kxy2 + kz * kz;
                if (k2 > k_cap2) break;
                if (modes.size() >= budget) throw CapTooLarge("enumerate_modes: mode budget exhausted");
                modes.push_back({nx, ny, nz, {kx, ky, kz}, si::c_0 * std::sqrt(k2)});
            }
        }
    }
    std::sort(modes.begin(), modes.end(), [](const CavityMode& l, const CavityMode& r) {
        return std::tie(l.omega, l.n_x, l.n_y, l.n_z) < std::tie(r.omega, r.n_x, r.n_y, r.n_z);
    });
    return modes;
}

std::vector<BathMode> mode_bath(const CavityConfig& cfg, std::span<const CavityMode> modes, double mass) {
    std::vector<BathMode> bath;
    bath.reserve(modes.size());
    for (const auto& mode : modes) {
        const auto [m, n, p] = mode.tm_indices();
        const auto amp = coupling_constants(m, n, p, cfg, mass);
        const double g = amp.common_factor * amp.g_a;
        auto bm = BathMode::from_coupling(g, mode.omega, mass, thermal_occupation(mode.omega, cfg.temperature));
        bm.weight *= kModeSumNormalization;
        bath.push_back(bm);
    }
    return bath;
}

ContinuumModel continuum_model(const CavityConfig& cfg) {
    const auto derived = derive_constants(cfg);
    return {ContinuumBath::exponential(derived.x_max, derived.tau, derived.x_max >= 1e3), derived.zeta};
}

KernelValue cavity_kernel(const CavityConfig& cfg, double t) {
    return kernel_at(BathModel{continuum_model(cfg)}, t);
}

} // namespace bathent::cavity
