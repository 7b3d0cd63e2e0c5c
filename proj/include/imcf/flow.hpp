#pragma once

#include <functional>
#include <string>
#include <vector>

#include "imcf/geometry.hpp"
#include "imcf/shapes.hpp"

namespace imcf {

enum class StepMethod { Rk4, Euler };

struct StepControl {
    double cfl = 0.2;     // fraction of the explicit parabolic step limit
    double dt_max = 1e-2; // absolute step ceiling
    double H_min = 1e-6;  // mean-convexity floor; below it the run aborts
    StepMethod method = StepMethod::Rk4;
};

struct FlowState {
    double t = 0.0;
    RadialShape shape;
    double last_dt = 0.0;
    long step_count = 0;
};

enum class TraceStatus { Completed, Aborted };

// One sampled row of the evolution: the integrated quantities plus step
// metadata, in the order the CSV writes them.
struct TraceRow {
    double t = 0.0;
    double dt = 0.0; // step size in effect when the sample was taken (0 at t=0)
    double vol = 0.0;
    double area = 0.0;
    double int_r2H = 0.0;
    double int_invH = 0.0;
    double Q = 0.0;
    double roundness = 0.0;
    double minH = 0.0;
    double maxH = 0.0;
    double support_min = 0.0;
};

struct FlowTrace {
    std::vector<TraceRow> rows;
    TraceStatus status = TraceStatus::Completed;
    std::string abort_reason; // empty when completed
    int dim = 0;
    double grid_h = 0.0;
};

// Called with the full snapshot at each sampled time, so per-node properties
// can be checked without storing every field in the trace.
using SampleObserver = std::function<void(double t, const GeometrySnapshot&)>;

// Normal-speed reduction of the flow for the log-radius: du/dt = v / (rho H).
NodeField rhs(const RadialShape& shape, double H_min);

// One adaptive explicit step; dt = min(dt_max, cfl h^2 / D) with D the
// steepest linearized diffusion coefficient v^3 / (rho^2 H^2) over nodes.
FlowState step(FlowState state, const StepControl& ctl);

// Evolve to t_end, sampling at t = 0, every multiple of sample_every (landing
// exactly by shrinking dt), and t_end. Aborts leave a partial trace with the
// reason recorded instead of throwing.
FlowTrace run(const RadialShape& shape, double t_end, const StepControl& ctl,
              double sample_every, const SampleObserver& observer = {});

} // namespace imcf
