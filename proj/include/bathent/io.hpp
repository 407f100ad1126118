// io.hpp — bath.json schema, spectrum strings and CSV output for the command-line front end
//
// bath.json examples, one per type:
//
//   {"type": "modes", "modes": [{"omega": 1.0, "weight": 0.5, "nbar": 0.0},
//                               {"omega": 2.0, "g": 1e-3, "mass": 1.0, "temperature": 0.1}]}
//
//   {"type": "continuum", "x_max": 100.0, "tau": 1e-11, "zeta": 1e-6,
//    "cutoff": "exponential", "coth_approx": false}
//   {"type": "continuum", "cavity": {"d": 1e-8, "T": 0.1, "material": "aluminum"}}
//
//   {"type": "path", "points": [{"t": 0, "f": 0, "phi": 0}, {"t": 1, "f": 2, "phi": 0.5}]}
//
// A mode gives either "weight" (= g^2/(2 m hbar omega^3)) or "g" with optional
// "mass" (default 1); and either "nbar" or "temperature" (default nbar = 0).

#pragma once

#include "bathent/bath.hpp"
#include "bathent/experiments.hpp"

#include "json.hpp"

#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace bathent::io {

BathModel parse_bath(const nlohmann::json& j);
BathModel load_bath(const std::string& path);

/// "a0,a1,b0,b1" split as the first dA values for A and the rest for B; dA
/// defaults to 2.
CouplingSpectrum parse_spectrum(std::string_view text, std::size_t dA = 2);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

void write_scan_csv(std::ostream& os, std::span<const ScanRow> rows);
void write_trajectory_csv(std::ostream& os, const TrajectoryResult& traj);
/// Columns t,f,phi
void write_kernel_csv(std::ostream& os, std::span<const double> times, std::span<const KernelValue> kernels);

nlohmann::json to_json(const SeparabilityResult& result);

} // namespace bathent::io
