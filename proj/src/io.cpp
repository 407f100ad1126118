// io.cpp — JSON and CSV plumbing

#include "bathent/io.hpp"

#include "bathent/cavity.hpp"
#include "bathent/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace bathent::io {

using nlohmann::json;

namespace {

double number(const json& j, const char* key) {
    if (!j.contains(key)) throw InvalidArgument(std::string("bath.json: missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number()) throw InvalidArgument(std::string("bath.json: field '") + key + "' must be a number");
    return v.get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
    return j.contains(key) ? number(j, key) : fallback;
}

BathMode parse_mode(const json& m) {
    if (!m.is_object()) throw InvalidArgument("bath.json: each mode must be an object");
    const double omega = number(m, "omega");
    if (!(omega > 0.0)) throw InvalidArgument("bath.json: mode omega must be positive");

    double nbar = 0.0;
    if (m.contains("nbar") && m.contains("temperature")) {
        throw InvalidArgument("bath.json: give either 'nbar' or 'temperature', not both");
    }
    if (m.contains("nbar")) nbar = number(m, "nbar");
    if (m.contains("temperature")) nbar = thermal_occupation(omega, number(m, "temperature"));

    if (m.contains("weight") == m.contains("g")) {
        throw InvalidArgument("bath.json: a mode needs exactly one of 'weight' or 'g'");
    }
    if (m.contains("weight")) return {omega, number(m, "weight"), nbar};
    return BathMode::from_coupling(number(m, "g"), omega, number_or(m, "mass", 1.0), nbar);
}

ContinuumModel parse_continuum(const json& j) {
    if (j.contains("cavity")) {
        const auto& c = j.at("cavity");
        cavity::CavityConfig cfg;
        cfg.d = number(c, "d");
        cfg.temperature = number(c, "T");
        cfg.omega_p = cavity::material_plasma_frequency(c.value("material", std::string("aluminum")));
        return cavity::continuum_model(cfg);
    }
    ContinuumModel model;
    model.bath.x_max = number(j, "x_max");
    model.bath.tau = number(j, "tau");
    model.zeta = number_or(j, "zeta", 1.0);
    model.bath.coth_approx = j.value("coth_approx", false);
    const std::string cutoff = j.value("cutoff", std::string("exponential"));
    if (!(model.bath.x_max > 0.0)) throw InvalidArgument("bath.json: x_max must be positive");
    if (cutoff == "exponential") {
        model.bath.cutoff = CutoffFunction::exponential(model.bath.x_max);
    } else if (cutoff == "gaussian") {
        model.bath.cutoff = CutoffFunction::gaussian(model.bath.x_max);
    } else {
        throw InvalidArgument("bath.json: unknown cutoff '" + cutoff + "'");
    }
    return model;
}

} // namespace

BathModel parse_bath(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
        throw InvalidArgument("bath.json: expected an object with a string 'type'");
    }
    const auto type = j.at("type").get<std::string>();
    BathModel model;
    if (type == "modes") {
        if (!j.contains("modes") || !j.at("modes").is_array()) throw InvalidArgument("bath.json: 'modes' array missing");
        DiscreteBath bath;
        for (const auto& m : j.at("modes")) bath.modes.push_back(parse_mode(m));
        model = std::move(bath);
    } else if (type == "continuum") {
        model = parse_continuum(j);
    } else if (type == "path") {
        if (!j.contains("points") || !j.at("points").is_array()) throw InvalidArgument("bath.json: 'points' array missing");
        PathBath path;
        for (const auto& p : j.at("points")) path.points.push_back({number(p, "t"), number(p, "f"), number(p, "phi")});
        model = std::move(path);
    } else {
        throw InvalidArgument("bath.json: unknown type '" + type + "'");
    }
    validate(model);
    return model;
}

BathModel load_bath(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open bath file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidArgument("bath file '" + path + "': " + e.what());
    }
    return parse_bath(j);
}

CouplingSpectrum parse_spectrum(std::string_view text, std::size_t dA) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw InvalidArgument("spectrum: cannot parse '" + std::string(token) + "' as a number");
        }
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (dA == 0 || values.size() <= dA) {
        throw InvalidArgument("spectrum: need " + std::to_string(dA) + " values for A and at least one for B");
    }
    return {std::vector<double>(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(dA)),
            std::vector<double>(values.begin() + static_cast<std::ptrdiff_t>(dA), values.end())};
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void write_scan_csv(std::ostream& os, std::span<const ScanRow> rows) {
    os << "f,phi,lambda0,negativity\n";
    for (const auto& r : rows) {
        os << format_double(r.f) << ',' << format_double(r.phi) << ',' << format_double(r.lambda0) << ','
           << format_double(r.negativity) << '\n';
    }
}

void write_trajectory_csv(std::ostream& os, const TrajectoryResult& traj) {
    os << "t,f,phi,lambda0,negativity\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        os << format_double(traj.times[i]) << ',' << format_double(traj.kernels[i].f) << ','
           << format_double(traj.kernels[i].phi) << ',' << format_double(traj.lambda0[i]) << ','
           << format_double(traj.negativity[i]) << '\n';
    }
}

void write_kernel_csv(std::ostream& os, std::span<const double> times, std::span<const KernelValue> kernels) {
    os << "t,f,phi\n";
    for (std::size_t i = 0; i < times.size(); ++i) {
        os << format_double(times[i]) << ',' << format_double(kernels[i].f) << ',' << format_double(kernels[i].phi)
           << '\n';
    }
}

json to_json(const SeparabilityResult& result) {
    json j;
    switch (result.kind) {
    case SeparabilityResult::Kind::Time: j["result"] = "time"; break;
    case SeparabilityResult::Kind::Never: j["result"] = "never"; break;
    case SeparabilityResult::Kind::NotReached: j["result"] = "not_reached"; break;
    }
    j["t_star"] = result.t_star ? json(*result.t_star) : json(nullptr);
    return j;
}

} // namespace bathent::io
