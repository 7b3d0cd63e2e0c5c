#pragma once

#include <string>

#include "imcf/flow.hpp"
#include "imcf/shapes.hpp"

namespace imcf {

// Everything a command needs: the initial shape, horizon and sampling, step
// control, tolerance knobs, and output paths (empty path = do not write).
struct RunConfig {
    ShapeSpec shape;
    double t_end = 1.0;
    double sample_every = 0.05;
    StepControl control;
    double eps_quad_scale = 1.0; // multiplier on the grid quadrature tolerance
    double mono_tol = 0.0;       // 0 selects the default max(1e-6, 100 h^2)
    int levels = 4;              // refinement levels for convergence studies
    std::string csv_path;
    std::string report_path;
    std::string svg_path;
};

// Throws ConfigError on violated constraints (t_end > 0, sampling interval in
// (0, t_end], positive step control, resolution bounds).
void validate_config(const RunConfig& cfg);

// Reads `key = value` lines ('#' starts a comment; blank lines ignored) whose
// keys mirror the CLI flag names, applying them onto cfg. Unknown keys or
// unparsable values throw ConfigError.
void apply_config_file(RunConfig& cfg, const std::string& path);

// Applies one key/value pair (shared by the file reader and tests).
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

} // namespace imcf
