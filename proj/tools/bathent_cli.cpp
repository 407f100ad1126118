// bathent_cli.cpp — Command-line front end: scan-plane, trajectory, cavity, septime
//
// Exit codes: 0 success, 2 invalid configuration, 3 numerical failure.

#include "bathent/cavity.hpp"
#include "bathent/errors.hpp"
#include "bathent/experiments.hpp"
#include "bathent/io.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace {

using namespace bathent;

constexpr int kExitInvalidConfig = 2;
constexpr int kExitNumerical = 3;

struct StateOptions {
    std::size_t dA = 2;
    std::string state_a;
    std::string state_b;
};

PureState parse_state(const std::string& text, std::size_t dim) {
    std::vector<Complex> amps;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t used = 0;
            amps.emplace_back(std::stod(token, &used), 0.0);
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::logic_error&) {
            throw InvalidArgument("state: cannot parse '" + token + "'");
        }
    }
    if (amps.size() != dim) {
        throw InvalidArgument("state: expected " + std::to_string(dim) + " amplitudes, got " +
                              std::to_string(amps.size()));
    }
    return PureState::normalized(std::move(amps));
}

DensityMatrix initial_state(const StateOptions& opts, const CouplingSpectrum& spectrum) {
    const std::size_t dB = spectrum.b.size();
    if (opts.state_a.empty() && opts.state_b.empty()) {
        if (spectrum.a.size() != 2) throw InvalidArgument("default initial state needs a qubit for A; pass --state-a");
        return reference_initial_state(dB);
    }
    const double h = 1.0 / std::sqrt(2.0);
    const PureState a = opts.state_a.empty() ? PureState({h, -h}) : parse_state(opts.state_a, spectrum.a.size());
    const PureState b = opts.state_b.empty() ? PureState::uniform(dB) : parse_state(opts.state_b, dB);
    return product_state(a, b);
}

// Writes to `path`, or stdout when empty.
template <class Writer>
void emit(const std::string& path, Writer&& write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot open output file '" + path + "'");
    write(out);
}

void add_state_options(CLI::App* cmd, StateOptions& opts) {
    cmd->add_option("--dims-a", opts.dA, "Number of spectrum values belonging to A")->check(CLI::PositiveNumber);
    cmd->add_option("--state-a", opts.state_a, "Real amplitudes of A's initial state, comma separated");
    cmd->add_option("--state-b", opts.state_b, "Real amplitudes of B's initial state, comma separated");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement of two qudits dephasing through a common heat bath"};
    app.require_subcommand(1);

    // scan-plane
    std::string spectrum_text;
    double f_max = 3.0;
    double phi_max = 3.0;
    std::size_t n = 121;
    std::string out_path;
    unsigned threads = 1;
    StateOptions state_opts;
    auto* scan = app.add_subcommand("scan-plane", "Smallest partial-transpose eigenvalue over the (f, phi) plane");
    scan->add_option("--spectrum", spectrum_text, "Coupling eigenvalues a0,a1,b0,b1")->required();
    scan->add_option("--f-max", f_max)->check(CLI::NonNegativeNumber);
    scan->add_option("--phi-max", phi_max)->check(CLI::NonNegativeNumber);
    scan->add_option("--n", n, "Points per axis")->check(CLI::PositiveNumber);
    scan->add_option("--out", out_path, "CSV output (default stdout)");
    scan->add_option("--threads", threads, "Worker threads, 0 = all cores");
    add_state_options(scan, state_opts);

    // trajectory
    std::string bath_path;
    double t_max = 1.0;
    bool log_times = false;
    auto* traj = app.add_subcommand("trajectory", "Follow the state along a bath's (f, phi) path");
    traj->add_option("--bath", bath_path, "bath.json")->required();
    traj->add_option("--spectrum", spectrum_text)->required();
    traj->add_option("--t-max", t_max)->required()->check(CLI::PositiveNumber);
    traj->add_option("--n", n)->check(CLI::PositiveNumber);
    traj->add_option("--out", out_path);
    traj->add_option("--threads", threads);
    traj->add_flag("--log", log_times, "Log-spaced times on [1e-8 t_max, t_max] instead of linear from 0");
    add_state_options(traj, state_opts);

    // cavity
    double d = 1e-8;
    double temperature = 0.1;
    std::string material = "aluminum";
    bool constants_only = false;
    double t_min_cavity = 1e-20;
    double t_max_cavity = 1e-12;
    std::size_t n_cavity = 200;
    auto* cav = app.add_subcommand("cavity", "Decoherence functions of two quantum dots in a conducting cavity");
    cav->add_option("--d", d, "Well separation (m)")->check(CLI::PositiveNumber);
    cav->add_option("--T", temperature, "Temperature (K)")->check(CLI::PositiveNumber);
    cav->add_option("--material", material);
    cav->add_option("--out", out_path, "CSV of t,f,phi on a log time grid");
    cav->add_flag("--constants", constants_only, "Print zeta, tau, x_max as JSON");
    cav->add_option("--t-min", t_min_cavity)->check(CLI::PositiveNumber);
    cav->add_option("--t-max", t_max_cavity)->check(CLI::PositiveNumber);
    cav->add_option("--n", n_cavity)->check(CLI::PositiveNumber);

    // septime
    auto* sep = app.add_subcommand("septime", "Time after which the state stays separable");
    sep->add_option("--bath", bath_path)->required();
    sep->add_option("--spectrum", spectrum_text)->required();
    sep->add_option("--t-max", t_max)->required()->check(CLI::PositiveNumber);
    add_state_options(sep, state_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidConfig;
    }

    try {
        if (*scan) {
            const auto spectrum = io::parse_spectrum(spectrum_text, state_opts.dA);
            const auto rows = scan_plane(initial_state(state_opts, spectrum), spectrum,
                                         ScanGrid::linear(f_max, phi_max, n), threads);
            emit(out_path, [&](std::ostream& os) { io::write_scan_csv(os, rows); });
        } else if (*traj) {
            const auto spectrum = io::parse_spectrum(spectrum_text, state_opts.dA);
            const auto bath = io::load_bath(bath_path);
            const auto times = log_times ? separability_time_grid(t_max) : std::vector<double>{};
            std::vector<double> grid = times;
            if (!log_times) {
                grid.resize(n);
                for (std::size_t i = 0; i < n; ++i)
                    grid[i] = n == 1 ? t_max : t_max * static_cast<double>(i) / static_cast<double>(n - 1);
            }
            const auto result = run_trajectory(initial_state(state_opts, spectrum), spectrum, bath, grid, threads);
            emit(out_path, [&](std::ostream& os) { io::write_trajectory_csv(os, result); });
        } else if (*cav) {
            cavity::CavityConfig cfg;
            cfg.d = d;
            cfg.temperature = temperature;
            cfg.omega_p = cavity::material_plasma_frequency(material);
            if (!cfg.dipole_approximation_valid()) {
                std::cerr << "warning: k_B T is not small against 2 pi hbar c0 / d; dipole approximation is poor\n";
            }
            const auto derived = cavity::derive_constants(cfg);
            if (constants_only) {
                const nlohmann::json j{{"zeta", derived.zeta}, {"tau", derived.tau}, {"x_max", derived.x_max}};
                std::cout << j.dump() << '\n';
            }
            if (!constants_only || !out_path.empty()) {
                if (!(t_max_cavity >= t_min_cavity)) throw InvalidArgument("cavity: --t-max must be >= --t-min");
                std::vector<double> times(n_cavity);
                std::vector<KernelValue> kernels(n_cavity);
                for (std::size_t i = 0; i < n_cavity; ++i) {
                    const double w = n_cavity == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(n_cavity - 1);
                    times[i] = t_min_cavity * std::pow(t_max_cavity / t_min_cavity, w);
                    kernels[i] = cavity::cavity_kernel(cfg, times[i]);
                }
                emit(out_path, [&](std::ostream& os) { io::write_kernel_csv(os, times, kernels); });
            }
        } else if (*sep) {
            const auto spectrum = io::parse_spectrum(spectrum_text, state_opts.dA);
            const auto bath = io::load_bath(bath_path);
            const auto result = separability_time(initial_state(state_opts, spectrum), spectrum, bath, t_max);
            std::cout << io::to_json(result).dump() << '\n';
        }
    } catch (const bathent::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == bathent::Error::Kind::InvalidConfig ? kExitInvalidConfig : kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
