// experiments.cpp — Scans, trajectories, separability time

#include "bathent/experiments.hpp"

#include "bathent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bathent {

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    v.back() = hi;
    return v;
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
    auto v = linspace(std::log(lo), std::log(hi), n);
    for (auto& x : v) x = std::exp(x);
    if (n > 0) {
        v.front() = lo;
        v.back() = hi;
    }
    return v;
}

void check_axis(const std::vector<double>& v, const char* name) {
    if (v.empty()) throw InvalidArgument(std::string("ScanGrid: empty ") + name + " axis");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] >= 0.0) || !std::isfinite(v[i])) {
            throw InvalidArgument(std::string("ScanGrid: ") + name + " values must be finite and >= 0");
        }
        if (i > 0 && v[i] < v[i - 1]) throw InvalidArgument(std::string("ScanGrid: ") + name + " must be ascending");
    }
}

} // namespace

ScanGrid ScanGrid::linear(double f_max, double phi_max, std::size_t n) {
    if (n == 0) throw InvalidArgument("ScanGrid::linear: n must be positive");
    ScanGrid g{linspace(0.0, f_max, n), linspace(0.0, phi_max, n), Spacing::Linear};
    g.validate();
    return g;
}

ScanGrid ScanGrid::log(double f_min, double f_max, double phi_min, double phi_max, std::size_t n) {
    if (n == 0 || !(f_min > 0.0) || !(phi_min > 0.0) || f_max < f_min || phi_max < phi_min) {
        throw InvalidArgument("ScanGrid::log: needs n > 0 and 0 < min <= max on both axes");
    }
    ScanGrid g{logspace(f_min, f_max, n), logspace(phi_min, phi_max, n), Spacing::Log};
    g.validate();
    return g;
}

ScanGrid ScanGrid::figure_default() { return linear(3.0, 3.0, 121); }

void ScanGrid::validate() const {
    check_axis(f_values, "f");
    check_axis(phi_values, "phi");
}

std::vector<ScanRow> scan_plane(const DensityMatrix& rho0, const CouplingSpectrum& spectrum, const ScanGrid& grid,
                                unsigned threads) {
    grid.validate();
    if (spectrum.dims() != rho0.dims()) throw DimensionMismatch("scan_plane: spectrum does not match state dims");
    const std::size_t n_phi = grid.phi_values.size();
    std::vector<ScanRow> rows(grid.f_values.size() * n_phi);
    parallel_for(rows.size(), threads, [&](std::size_t idx) {
        const KernelValue k{grid.f_values[idx / n_phi], grid.phi_values[idx % n_phi]};
        const auto report = analyze(evolve(rho0, spectrum, k));
        rows[idx] = {k.f, k.phi, report.min_pt_eigenvalue, report.negativity};
    });
    return rows;
}

TrajectoryResult run_trajectory(const DensityMatrix& rho0, const CouplingSpectrum& spectrum, const BathModel& bath,
                                std::span<const double> times, unsigned threads) {
    validate(bath);
    if (spectrum.dims() != rho0.dims()) throw DimensionMismatch("run_trajectory: spectrum does not match state dims");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0) || (i > 0 && times[i] < times[i - 1])) {
            throw InvalidArgument("run_trajectory: times must be ascending and >= 0");
        }
    }

    TrajectoryResult out;
    out.times.assign(times.begin(), times.end());
    out.kernels.resize(times.size());
    out.lambda0.resize(times.size());
    out.negativity.resize(times.size());
    parallel_for(times.size(), threads, [&](std::size_t i) {
        const auto k = kernel_at(bath, times[i]);
        const auto report = analyze(evolve(rho0, spectrum, k));
        out.kernels[i] = k;
        out.lambda0[i] = report.min_pt_eigenvalue;
        out.negativity[i] = report.negativity;
    });
    return out;
}

bool entanglement_persists(const DensityMatrix& rho0, const CouplingSpectrum& spectrum) {
    const auto pointer = pointer_values(spectrum);
    if (!pointer.degenerate()) return false;

    const std::size_t dB = rho0.dims().dB;
    bool nonlocal_coherence = false;
    for (const auto& cls : pointer.classes)
        for (std::size_t r : cls)
            for (std::size_t c : cls) {
                const bool differs_on_a = r / dB != c / dB;
                const bool differs_on_b = r % dB != c % dB;
                if (differs_on_a && differs_on_b && std::abs(rho0(r, c)) > kPptTolerance) nonlocal_coherence = true;
            }
    if (!nonlocal_coherence) return false;
    return min_pt_eigenvalue(dephased_limit(rho0, spectrum)) <= kPptTolerance;
}

std::vector<double> separability_time_grid(double t_max) { return logspace(1e-8 * t_max, t_max, 1024); }

SeparabilityResult separability_time(const DensityMatrix& rho0, const CouplingSpectrum& spectrum,
                                     const BathModel& bath, double t_max) {
    validate(bath);
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InvalidArgument("separability_time: t_max must be positive");
    if (spectrum.dims() != rho0.dims()) throw DimensionMismatch("separability_time: spectrum does not match state");

    const auto entangled = [&](double t) {
        return min_pt_eigenvalue(evolve(rho0, spectrum, kernel_at(bath, t))) < -kPptTolerance;
    };

    const auto times = separability_time_grid(t_max);
    std::vector<char> flags(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) flags[i] = entangled(times[i]) ? 1 : 0;

    const auto last = std::find(flags.rbegin(), flags.rend(), 1);
    if (last == flags.rend()) return {SeparabilityResult::Kind::Time, 0.0};
    if (entanglement_persists(rho0, spectrum)) return {SeparabilityResult::Kind::Never, std::nullopt};
    if (flags.back()) return {SeparabilityResult::Kind::NotReached, std::nullopt};

    const auto i = static_cast<std::size_t>(std::distance(last, flags.rend()) - 1);
    double lo = times[i];     // entangled
    double hi = times[i + 1]; // separable
    while (hi - lo > 1e-6 * hi) {
        const double mid = 0.5 * (lo + hi);
        (entangled(mid) ? lo : hi) = mid;
    }
    return {SeparabilityResult::Kind::Time, hi};
}

} // namespace bathent
