#pragma once

#include "imcf/flow.hpp"
#include "imcf/geometry.hpp"
#include "imcf/report.hpp"
#include "imcf/shapes.hpp"

namespace imcf {

// Per-pair slope test on the normalized monotone quantity: passes iff
// Q_{i+1} - Q_i >= -tol (1 + |Q|) dt for every consecutive sample pair.
// tol <= 0 selects the default max(1e-6, 100 h^2). Reports the minimum slope
// and where it occurred; aborted traces yield a Skip entry.
CheckEntry check_q_monotone(const FlowTrace& trace, double tol = 0.0);

// Static comparison dim*vol <= int_r2H / (dim-1): residual is the fused q_raw,
// which must not exceed the quadrature tolerance.
CheckEntry check_main_inequality(const RadialShape& shape, double eps_scale = 1.0);

// Static comparison dim*vol <= (dim-1) int_invH, same tolerance treatment.
CheckEntry check_ros(const RadialShape& shape, double eps_scale = 1.0);

// Two-sided integral identity for the squared-distance potential, plus the
// convexity chain dim(dim-1)vol <= (1/4) int H (dw/dnu)^2 <= int H r^2 when
// every principal curvature is nonnegative (skipped otherwise).
CheckReport check_reilly(const RadialShape& shape, double eps_scale = 1.0);

// Pointwise |II|^2 >= H^2/(dim-1) - 1e-10 at every node.
CheckEntry check_ii_bound(const GeometrySnapshot& snap);

// Three trace-level identities: unit log-area growth rate, centered volume
// derivative against int_invH, and int_invH >= dim/(dim-1) vol at each sample.
CheckReport check_evolution_identities(const FlowTrace& trace, double eps_scale = 1.0);

// Flat-Q traces must stay round (roundness <= C sqrt(eps)); visibly non-round
// starts must strictly increase Q over the run. Traces matching neither
// premise pass vacuously.
CheckEntry check_rigidity(const FlowTrace& trace, double C = 10.0, double eps_scale = 1.0);

} // namespace imcf
