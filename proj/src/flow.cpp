#include "imcf/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "imcf/errors.hpp"
#include "imcf/format.hpp"

namespace imcf {

namespace {

constexpr double kDtFloor = 1e-12;
// Distance to a sample time below which we consider the step to have landed.
constexpr double kLanding = 1e-12;

double min_mean_curvature(const RadialShape& shape) {
    return curvatures(shape).H.minCoeff();
}

// Parabolic step limit: the linearized equation diffuses u with coefficient
// v^3 / (rho^2 H^2) (in units of the squared grid spacing).
double diffusion_scale(const RadialShape& shape, double H_min) {
    const GeometrySnapshot snap = curvatures(shape);
    const double minH = snap.H.minCoeff();
    if (minH < H_min)
        throw LostMeanConvexity("flow: min mean curvature " + format_shortest(minH) +
                                " fell below the floor " + format_shortest(H_min));
    return (snap.v.cube() / (snap.rho.square() * snap.H.square())).maxCoeff();
}

NodeField rhs_of(const RadialShape& shape, double H_min) {
    const GeometrySnapshot snap = curvatures(shape);
    const double minH = snap.H.minCoeff();
    if (minH < H_min)
        throw LostMeanConvexity("flow: min mean curvature " + format_shortest(minH) +
                                " fell below the floor " + format_shortest(H_min));
    return snap.v / (snap.rho * snap.H);
}

RadialShape with_u(const RadialShape& base, NodeField u) {
    RadialShape s = base;
    s.u = std::move(u);
    return s;
}

FlowState step_capped(FlowState state, const StepControl& ctl, double dt_cap) {
    const double h = state.shape.grid.spacing;
    const double D = diffusion_scale(state.shape, ctl.H_min);
    double dt = std::min(ctl.dt_max, ctl.cfl * h * h / D);
    const bool capped = dt_cap < dt;
    if (capped) dt = dt_cap;
    // A vanishing stability-limited step means the problem has stiffened
    // beyond what explicit stepping can follow; a tiny event-landing step is
    // fine and must not trip the same alarm.
    if (dt < kDtFloor && !capped)
        throw StiffnessFailure("flow: step size underflow (dt = " + format_shortest(dt) +
                               ") at t = " + format_shortest(state.t));

    const NodeField& u = state.shape.u;
    NodeField u_next;
    if (ctl.method == StepMethod::Euler) {
        u_next = u + dt * rhs_of(state.shape, ctl.H_min);
    } else {
        const NodeField k1 = rhs_of(state.shape, ctl.H_min);
        const NodeField k2 = rhs_of(with_u(state.shape, u + 0.5 * dt * k1), ctl.H_min);
        const NodeField k3 = rhs_of(with_u(state.shape, u + 0.5 * dt * k2), ctl.H_min);
        const NodeField k4 = rhs_of(with_u(state.shape, u + dt * k3), ctl.H_min);
        u_next = u + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    state.shape.u = std::move(u_next);
    if (min_mean_curvature(state.shape) < ctl.H_min)
        throw LostMeanConvexity("flow: step landed below the mean-curvature floor at t = " +
                                format_shortest(state.t + dt));
    state.t += dt;
    state.last_dt = dt;
    state.step_count += 1;
    return state;
}

TraceRow sample_row(const FlowState& state, const GeometrySnapshot& snap) {
    TraceRow row;
    row.t = state.t;
    row.dt = state.last_dt;
    row.vol = snap.vol;
    row.area = snap.area;
    row.int_r2H = snap.int_r2H;
    row.int_invH = snap.int_invH;
    row.Q = q_value(snap, state.t);
    row.roundness = snap.roundness;
    row.minH = snap.H.minCoeff();
    row.maxH = snap.H.maxCoeff();
    row.support_min = support_min(snap);
    return row;
}

} // namespace

NodeField rhs(const RadialShape& shape, double H_min) { return rhs_of(shape, H_min); }

FlowState step(FlowState state, const StepControl& ctl) {
    return step_capped(std::move(state), ctl, std::numeric_limits<double>::infinity());
}

FlowTrace run(const RadialShape& shape, double t_end, const StepControl& ctl,
              double sample_every, const SampleObserver& observer) {
    if (t_end <= 0.0) throw InvalidSpec("run: time horizon must be positive");
    if (sample_every <= 0.0) throw InvalidSpec("run: sampling interval must be positive");

    FlowTrace trace;
    trace.dim = shape.grid.dim;
    trace.grid_h = shape.grid.spacing;

    FlowState state;
    state.shape = shape;

    auto record = [&](const FlowState& s) {
        const GeometrySnapshot snap = analyze(s.shape);
        trace.rows.push_back(sample_row(s, snap));
        if (observer) observer(s.t, snap);
    };

    try {
        // Refuse to start below the curvature floor: an aborted empty trace is
        // clearer than one sample of a shape the flow cannot evolve.
        const double minH0 = min_mean_curvature(state.shape);
        if (minH0 < ctl.H_min)
            throw LostMeanConvexity("flow: initial min mean curvature " +
                                    format_shortest(minH0) + " is below the floor " +
                                    format_shortest(ctl.H_min));
        record(state);
        long k = 1; // next sample multiple to land on
        while (state.t < t_end - kLanding) {
            double target = std::min(t_end, double(k) * sample_every);
            if (target > t_end - kLanding) target = t_end;
            if (target <= state.t + kLanding) {
                ++k; // this multiple is already behind us
                continue;
            }
            while (state.t < target - kLanding)
                state = step_capped(std::move(state), ctl, target - state.t);
            state.t = target; // land exactly so sample times are clean
            record(state);
            if (target == t_end) break;
            ++k;
        }
    } catch (const LostMeanConvexity& e) {
        trace.status = TraceStatus::Aborted;
        trace.abort_reason = e.what();
    } catch (const StiffnessFailure& e) {
        trace.status = TraceStatus::Aborted;
        trace.abort_reason = e.what();
    }
    return trace;
}

} // namespace imcf
