#include "imcf/config.hpp"

#include <charconv>
#include <fstream>
#include <string>

#include "imcf/errors.hpp"

namespace imcf {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* end = value.data() + value.size();
    const auto res = std::from_chars(value.data(), end, out);
    if (res.ec != std::errc{} || res.ptr != end)
        throw ConfigError("config: key '" + key + "' needs a number, got '" + value + "'");
    return out;
}

long parse_int(const std::string& key, const std::string& value) {
    long out = 0;
    const char* end = value.data() + value.size();
    const auto res = std::from_chars(value.data(), end, out);
    if (res.ec != std::errc{} || res.ptr != end)
        throw ConfigError("config: key '" + key + "' needs an integer, got '" + value + "'");
    return out;
}

std::pair<std::string, std::string> split_pair(const std::string& key, const std::string& value) {
    const auto colon = value.find(':');
    if (colon == std::string::npos)
        throw ConfigError("config: key '" + key + "' needs the form a:b, got '" + value + "'");
    return {trim(value.substr(0, colon)), trim(value.substr(colon + 1))};
}

ShapeKind parse_kind(const std::string& value) {
    if (value == "sphere") return ShapeKind::Sphere;
    if (value == "offset_sphere") return ShapeKind::OffsetSphere;
    if (value == "spheroid") return ShapeKind::Spheroid;
    if (value == "perturbed_sphere") return ShapeKind::PerturbedSphere;
    throw ConfigError("config: unknown shape '" + value +
                      "' (sphere, offset_sphere, spheroid, perturbed_sphere)");
}

StepMethod parse_method(const std::string& value) {
    if (value == "rk4") return StepMethod::Rk4;
    if (value == "euler") return StepMethod::Euler;
    throw ConfigError("config: unknown method '" + value + "' (rk4, euler)");
}

} // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "shape") {
        cfg.shape.kind = parse_kind(value);
    } else if (key == "n") {
        cfg.shape.dim = int(parse_int(key, value));
    } else if (key == "N") {
        cfg.shape.resolution = Index(parse_int(key, value));
    } else if (key == "radius") {
        cfg.shape.radius = parse_double(key, value);
    } else if (key == "offset") {
        cfg.shape.offset = parse_double(key, value);
    } else if (key == "axes") {
        const auto [a, b] = split_pair(key, value);
        cfg.shape.axis_a = parse_double(key, a);
        cfg.shape.axis_b = parse_double(key, b);
    } else if (key == "perturb") {
        const auto [k, amp] = split_pair(key, value);
        cfg.shape.modes.push_back({int(parse_int(key, k)), parse_double(key, amp)});
    } else if (key == "t-end") {
        cfg.t_end = parse_double(key, value);
    } else if (key == "sample-every") {
        cfg.sample_every = parse_double(key, value);
    } else if (key == "cfl") {
        cfg.control.cfl = parse_double(key, value);
    } else if (key == "dt-max") {
        cfg.control.dt_max = parse_double(key, value);
    } else if (key == "h-min") {
        cfg.control.H_min = parse_double(key, value);
    } else if (key == "method") {
        cfg.control.method = parse_method(value);
    } else if (key == "eps-quad-scale") {
        cfg.eps_quad_scale = parse_double(key, value);
    } else if (key == "mono-tol") {
        cfg.mono_tol = parse_double(key, value);
    } else if (key == "levels") {
        cfg.levels = int(parse_int(key, value));
    } else if (key == "csv") {
        cfg.csv_path = value;
    } else if (key == "report") {
        cfg.report_path = value;
    } else if (key == "svg") {
        cfg.svg_path = value;
    } else {
        throw ConfigError("config: unknown key '" + key + "'");
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) +
                              " is not of the form key = value: '" + stripped + "'");
        apply_config_entry(cfg, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
}

void validate_config(const RunConfig& cfg) {
    const auto& s = cfg.shape;
    if (s.dim < 2) throw ConfigError("config: n must be >= 2");
    if (s.resolution < 16) throw ConfigError("config: N must be >= 16");
    if (s.radius <= 0.0) throw ConfigError("config: radius must be positive");
    if (s.offset < 0.0) throw ConfigError("config: offset must be nonnegative");
    if (s.axis_a <= 0.0 || s.axis_b <= 0.0) throw ConfigError("config: axes must be positive");
    for (const auto& m : s.modes)
        if (m.mode < 1) throw ConfigError("config: perturbation mode must be >= 1");
    if (cfg.t_end <= 0.0) throw ConfigError("config: t-end must be positive");
    if (cfg.sample_every <= 0.0 || cfg.sample_every > cfg.t_end)
        throw ConfigError("config: sample-every must lie in (0, t-end]");
    if (cfg.control.cfl <= 0.0 || cfg.control.cfl > 1.0)
        throw ConfigError("config: cfl must lie in (0, 1]");
    if (cfg.control.dt_max <= 0.0) throw ConfigError("config: dt-max must be positive");
    if (cfg.control.H_min <= 0.0) throw ConfigError("config: h-min must be positive");
    if (cfg.eps_quad_scale <= 0.0) throw ConfigError("config: eps-quad-scale must be positive");
    if (cfg.mono_tol < 0.0) throw ConfigError("config: mono-tol must be nonnegative");
}

} // namespace imcf
