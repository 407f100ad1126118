// experiments.hpp — (f, phi)-plane scans, bath trajectories and separability-time search

#pragma once

#include "bathent/bath.hpp"
#include "bathent/entanglement.hpp"

#include <optional>
#include <span>
#include <vector>

namespace bathent {

enum class Spacing { Linear, Log };

struct ScanGrid {
    std::vector<double> f_values;
    std::vector<double> phi_values;
    Spacing spacing = Spacing::Linear;

    /// n points per axis on [0, f_max] x [0, phi_max].
    static ScanGrid linear(double f_max, double phi_max, std::size_t n);
    /// n log-spaced points per axis on [f_min, f_max] x [phi_min, phi_max], all > 0.
    static ScanGrid log(double f_min, double f_max, double phi_min, double phi_max, std::size_t n);
    /// 121 x 121 points on [0, 3] x [0, 3].
    static ScanGrid figure_default();

    void validate() const;
};

struct ScanRow {
    double f = 0.0;
    double phi = 0.0;
    double lambda0 = 0.0;
    double negativity = 0.0;
};

/// One row per grid point, f-major. `threads` = 0 picks the hardware concurrency;
/// results do not depend on the thread count.
std::vector<ScanRow> scan_plane(const DensityMatrix& rho0, const CouplingSpectrum& spectrum, const ScanGrid& grid,
                                unsigned threads = 1);

struct TrajectoryResult {
    std::vector<double> times;
    std::vector<KernelValue> kernels;
    std::vector<double> lambda0;
    std::vector<double> negativity;
};

/// Times must be ascending and non-negative.
TrajectoryResult run_trajectory(const DensityMatrix& rho0, const CouplingSpectrum& spectrum, const BathModel& bath,
                                std::span<const double> times, unsigned threads = 1);

struct SeparabilityResult {
    enum class Kind { Time, Never, NotReached };
    Kind kind = Kind::NotReached;
    std::optional<double> t_star;
};

/// True when no finite amount of dephasing can disentangle the state: the
/// spectrum has a degeneracy that keeps a non-local coherence alive and the
/// f -> infinity limit is not strictly inside the PPT set.
bool entanglement_persists(const DensityMatrix& rho0, const CouplingSpectrum& spectrum);

/// Start of the final separable stretch before t_max. The bath is sampled on
/// 1024 log-spaced times in [1e-8 t_max, t_max]; the last entangled -> separable
/// change is refined by bisection to 1e-6 relative. Never if entanglement is
/// generated and entanglement_persists(); NotReached if still entangled at t_max;
/// Time(0) if no sample is entangled.
SeparabilityResult separability_time(const DensityMatrix& rho0, const CouplingSpectrum& spectrum,
                                     const BathModel& bath, double t_max);

/// Sampling used by separability_time.
std::vector<double> separability_time_grid(double t_max);

/// Deterministic fork-join over [0, n): each index is written by exactly one worker.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn);

} // namespace bathent

#include "bathent/detail/parallel.hpp"
