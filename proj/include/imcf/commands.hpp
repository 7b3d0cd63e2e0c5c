#pragma once

#include <iosfwd>
#include <vector>

#include "imcf/config.hpp"
#include "imcf/report.hpp"

namespace imcf {

// Exit codes shared by all commands.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitFlowAborted = 2;
inline constexpr int kExitConfigError = 3;

// Evolve the configured shape and evaluate every trace-level check; writes
// CSV / report / SVG as configured. Returns an exit code.
int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Static checks only (validation, both global inequalities, the boundary
// identity, the pointwise curvature bound).
int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// One refinement level of the study driven by cmd_convergence.
struct ConvergenceLevel {
    int level = 0;
    Index nodes = 0;
    double h = 0.0;
    double residual = 0.0;
};

struct ConvergenceStudy {
    std::vector<ConvergenceLevel> levels;
    double fitted_order = 0.0; // least-squares slope of log residual vs log h
    bool degenerate = false;   // residuals at roundoff; order not measurable
    std::string residual_name; // which residual was tracked
};

// Repeats a residual measurement over `levels` refinements of the configured
// shape (curvature error against the exact value for sphere kinds, boundary
// identity mismatch otherwise) and fits the observed order.
ConvergenceStudy convergence_study(const RunConfig& cfg);

int cmd_convergence(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace imcf
