#include "imcf/monitors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "imcf/errors.hpp"
#include "imcf/format.hpp"

namespace imcf {

namespace {

std::string at_t(double t) { return "t=" + format_shortest(t); }

CheckEntry skipped(std::string name, std::string why) {
    return {std::move(name), CheckStatus::Skip, 0.0, 0.0, std::move(why)};
}

} // namespace

CheckEntry check_q_monotone(const FlowTrace& trace, double tol) {
    if (trace.status != TraceStatus::Completed)
        return skipped("q_monotone", "aborted:" + trace.abort_reason);
    if (trace.rows.size() < 3) return skipped("q_monotone", "needs-3-samples");
    if (tol <= 0.0) tol = std::max(1e-6, 100.0 * trace.grid_h * trace.grid_h);

    double min_slope = std::numeric_limits<double>::infinity();
    double bound_at_min = 0.0;
    double t_at_min = trace.rows.front().t;
    bool ok = true;
    for (size_t i = 0; i + 1 < trace.rows.size(); ++i) {
        const TraceRow& a = trace.rows[i];
        const TraceRow& b = trace.rows[i + 1];
        const double slope = (b.Q - a.Q) / (b.t - a.t);
        const double bound = tol * (1.0 + std::max(std::abs(a.Q), std::abs(b.Q)));
        if (slope < -bound) ok = false;
        if (slope < min_slope) {
            min_slope = slope;
            bound_at_min = bound;
            t_at_min = a.t;
        }
    }
    return {"q_monotone", ok ? CheckStatus::Pass : CheckStatus::Fail, min_slope, bound_at_min,
            at_t(t_at_min)};
}

CheckEntry check_main_inequality(const RadialShape& shape, double eps_scale) {
    const GeometrySnapshot snap = analyze(shape);
    const double tol = eps_scale * eps_quad_rel(shape.grid) * (snap.dim * snap.vol);
    return {"q_nonpositive", snap.q_raw <= tol ? CheckStatus::Pass : CheckStatus::Fail,
            snap.q_raw, tol, "static"};
}

CheckEntry check_ros(const RadialShape& shape, double eps_scale) {
    const double slack = ros_slack(shape);
    const GeometrySnapshot snap = analyze(shape);
    const double tol = eps_scale * eps_quad_rel(shape.grid) * (snap.dim * snap.vol);
    return {"invH_volume_bound", -slack <= tol ? CheckStatus::Pass : CheckStatus::Fail, -slack,
            tol, "static"};
}

CheckReport check_reilly(const RadialShape& shape, double eps_scale) {
    CheckReport report;
    const ReillyTerms terms = reilly_terms(shape);
    const GeometrySnapshot snap = analyze(shape);
    const double n = double(snap.dim);

    const double resid = std::abs(terms.lhs - terms.rhs);
    const double tol = 0.005 * std::abs(terms.lhs);
    report.add({"boundary_identity", resid <= tol ? CheckStatus::Pass : CheckStatus::Fail, resid,
                tol, "static"});

    const bool convex = snap.kappa_profile.minCoeff() >= 0.0 &&
                        (snap.dim == 2 || snap.kappa_orbit.minCoeff() >= 0.0);
    if (!convex) {
        report.add(skipped("convexity_chain", "not-convex"));
        return report;
    }
    const double chain_tol = eps_scale * eps_quad_rel(shape.grid) * n * (n - 1.0) * snap.vol;
    const double lower = terms.normal_energy - n * (n - 1.0) * snap.vol;
    const double upper = snap.int_r2H - terms.normal_energy;
    report.add({"convexity_chain_lower", lower >= -chain_tol ? CheckStatus::Pass : CheckStatus::Fail,
                lower, chain_tol, "static"});
    report.add({"convexity_chain_upper", upper >= -chain_tol ? CheckStatus::Pass : CheckStatus::Fail,
                upper, chain_tol, "static"});
    return report;
}

CheckEntry check_ii_bound(const GeometrySnapshot& snap) {
    const NodeField slack = snap.ii_sq - snap.H.square() / double(snap.dim - 1);
    Index at = 0;
    const double min_slack = slack.minCoeff(&at);
    return {"ii_lower_bound", min_slack >= -1e-10 ? CheckStatus::Pass : CheckStatus::Fail,
            min_slack, 1e-10, "node=" + std::to_string(at)};
}

CheckReport check_evolution_identities(const FlowTrace& trace, double eps_scale) {
    CheckReport report;
    const char* names[3] = {"area_growth_rate", "vol_derivative_matches_invH",
                            "invH_volume_bound"};
    if (trace.status != TraceStatus::Completed) {
        for (const char* n : names) report.add(skipped(n, "aborted:" + trace.abort_reason));
        return report;
    }
    if (trace.rows.size() < 3) {
        for (const char* n : names) report.add(skipped(n, "needs-3-samples"));
        return report;
    }

    const auto& rows = trace.rows;
    const double n = double(trace.dim);

    // (a) the surface measure grows exactly exponentially: log Area(t) = t + log Area(0).
    {
        double worst = 0.0, t_at = rows.front().t;
        for (const TraceRow& r : rows) {
            const double resid = std::abs(std::log(r.area / rows.front().area) - r.t);
            if (resid > worst) {
                worst = resid;
                t_at = r.t;
            }
        }
        const double tol = std::max(1e-4, 100.0 * trace.grid_h * trace.grid_h);
        report.add({names[0], worst <= tol ? CheckStatus::Pass : CheckStatus::Fail, worst, tol,
                    at_t(t_at)});
    }

    // (b) d vol / dt equals int(1/H), tested by centered differencing the samples.
    {
        double worst = 0.0, t_at = rows[1].t;
        for (size_t i = 1; i + 1 < rows.size(); ++i) {
            const double slope = (rows[i + 1].vol - rows[i - 1].vol) / (rows[i + 1].t - rows[i - 1].t);
            const double rel = std::abs(slope - rows[i].int_invH) / rows[i].int_invH;
            if (rel > worst) {
                worst = rel;
                t_at = rows[i].t;
            }
        }
        report.add({names[1], worst <= 0.01 ? CheckStatus::Pass : CheckStatus::Fail, worst, 0.01,
                    at_t(t_at)});
    }

    // (c) int(1/H) >= n/(n-1) vol at every sample.
    {
        double worst_margin = std::numeric_limits<double>::infinity();
        double tol_at = 0.0, t_at = rows.front().t;
        bool ok = true;
        for (const TraceRow& r : rows) {
            const double margin = r.int_invH - n / (n - 1.0) * r.vol;
            const double tol = eps_scale * eps_quad_rel(trace.grid_h) * n * r.vol;
            if (margin < -tol) ok = false;
            if (margin < worst_margin) {
                worst_margin = margin;
                tol_at = tol;
                t_at = r.t;
            }
        }
        report.add({names[2], ok ? CheckStatus::Pass : CheckStatus::Fail, worst_margin, tol_at,
                    at_t(t_at)});
    }
    return report;
}

CheckEntry check_rigidity(const FlowTrace& trace, double C, double eps_scale) {
    if (trace.status != TraceStatus::Completed)
        return skipped("rigidity", "aborted:" + trace.abort_reason);
    if (trace.rows.size() < 2) return skipped("rigidity", "needs-2-samples");

    const auto& rows = trace.rows;
    const double n = double(trace.dim);
    const double eps = eps_scale * eps_quad_rel(trace.grid_h);
    const double q_thresh = eps * n * rows.front().vol;

    double max_q = 0.0;
    for (const TraceRow& r : rows) max_q = std::max(max_q, std::abs(r.Q));

    if (max_q <= q_thresh) {
        // Flat Q forces roundness: the trace must look like spheres throughout.
        double worst = 0.0, t_at = rows.front().t;
        for (const TraceRow& r : rows)
            if (r.roundness > worst) {
                worst = r.roundness;
                t_at = r.t;
            }
        const double tol = C * std::sqrt(eps);
        return {"rigidity", worst <= tol ? CheckStatus::Pass : CheckStatus::Fail, worst, tol,
                at_t(t_at)};
    }
    if (rows.front().roundness > 0.05) {
        // Visibly non-round start: Q must have strictly increased over the run.
        const double gain = rows.back().Q - rows.front().Q;
        return {"rigidity", gain > 0.0 ? CheckStatus::Pass : CheckStatus::Fail, gain, 0.0,
                at_t(rows.back().t)};
    }
    return {"rigidity", CheckStatus::Pass, 0.0, 0.0, "premises-not-met"};
}

} // namespace imcf
