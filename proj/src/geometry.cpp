#include "imcf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "imcf/errors.hpp"

namespace imcf {

namespace {

// The combination u_theta * cot(theta) that enters the orbit curvature. Its
// pole value is the L'Hopital limit u_thetatheta (u_theta vanishes at the
// poles for even data). Identically zero on periodic grids, where no orbit
// directions exist and the cotangent would be meaningless.
NodeField cot_term(const Grid& g, const NodeField& ut, const NodeField& utt) {
    NodeField c = NodeField::Zero(g.node_count);
    if (g.kind != GridKind::Polar) return c;
    const Index N = g.node_count;
    for (Index i = 1; i + 1 < N; ++i) c(i) = ut(i) * std::cos(g.theta(i)) / std::sin(g.theta(i));
    c(0) = utt(0);
    c(N - 1) = utt(N - 1);
    return c;
}

struct Fields {
    NodeField ut, utt, w2, v, rho, c;
};

Fields differentiate(const RadialShape& shape) {
    Fields f;
    f.ut = derivative(shape.grid, shape.u, 1);
    f.utt = derivative(shape.grid, shape.u, 2);
    f.w2 = f.ut.square();
    f.v = (1.0 + f.w2).sqrt();
    f.rho = shape.u.exp();
    f.c = cot_term(shape.grid, f.ut, f.utt);
    return f;
}

} // namespace

double eps_quad_rel(double spacing) { return std::max(1e-8, 50.0 * spacing * spacing); }

double eps_quad_rel(const Grid& grid) { return eps_quad_rel(grid.spacing); }

GeometrySnapshot curvatures(const RadialShape& shape) {
    const Grid& g = shape.grid;
    if (!shape.u.allFinite()) throw InvalidField("curvatures: shape has non-finite values");
    const Fields f = differentiate(shape);
    const double m = double(g.dim - 2); // orbit multiplicity

    GeometrySnapshot snap;
    snap.dim = g.dim;
    snap.base_offset = shape.base_offset;
    snap.rho = f.rho;
    snap.v = f.v;
    snap.kappa_profile = (f.v.square() - f.utt) / (f.rho * f.v.cube());
    // a plane curve has no rotated directions; keep the unused field at zero
    snap.kappa_orbit = m > 0.0 ? NodeField((1.0 - f.c) / (f.rho * f.v))
                               : NodeField(NodeField::Zero(g.node_count));
    snap.H = snap.kappa_profile + m * snap.kappa_orbit;
    snap.ii_sq = snap.kappa_profile.square() + m * snap.kappa_orbit.square();
    snap.area_weight = f.rho.pow(g.dim - 1) * f.v;
    snap.normal_radial = f.v.inverse();
    const double d = shape.base_offset;
    snap.r2 = f.rho.square() - (2.0 * d) * f.rho * g.theta.cos() + d * d;
    if (!snap.H.allFinite()) throw InvalidField("curvatures: curvature fields are non-finite");
    return snap;
}

GeometrySnapshot analyze(const RadialShape& shape) {
    const Grid& g = shape.grid;
    GeometrySnapshot snap = curvatures(shape);
    const Fields f = differentiate(shape);
    const double n = double(g.dim);
    const double m = n - 2.0;

    snap.vol = sphere_integral(g, f.rho.pow(g.dim)) / n;
    snap.area = sphere_integral(g, snap.area_weight);
    snap.int_r2H = sphere_integral(g, snap.r2 * snap.H * snap.area_weight);
    // int(1/H) only exists on mean-convex shapes; leave it NaN otherwise so a
    // mistaken read is loud rather than plausibly small.
    snap.int_invH = snap.H.minCoeff() > 0.0
                        ? sphere_integral(g, snap.area_weight / snap.H)
                        : std::numeric_limits<double>::quiet_NaN();

    // q_raw = n vol - int_r2H/(n-1), but evaluated through the pointwise
    // identity 1 - rho H v/(n-1) = (u_tt/v^2 + (n-2) c)/(n-1) so the two large
    // sphere contributions cancel node-by-node instead of in the final
    // subtraction. A centered round sphere then gives exactly zero.
    const double d = shape.base_offset;
    const NodeField defect = (f.utt / (1.0 + f.w2) + m * f.c) / (n - 1.0);
    const NodeField off_part =
        (d * d - (2.0 * d) * f.rho * g.theta.cos()) * snap.H * snap.area_weight / (n - 1.0);
    snap.q_raw = sphere_integral(g, f.rho.pow(g.dim) * defect - off_part);

    const double mean_rho = f.rho.mean();
    snap.roundness = (f.rho.maxCoeff() - f.rho.minCoeff()) / mean_rho;
    return snap;
}

double q_value(const GeometrySnapshot& snap, double t) {
    const double n = double(snap.dim);
    return std::exp(-t * (n - 2.0) / (n - 1.0)) * snap.q_raw;
}

ReillyTerms reilly_terms(const RadialShape& shape) {
    const Grid& g = shape.grid;
    const GeometrySnapshot snap = analyze(shape);
    const Fields f = differentiate(shape);
    const double d = shape.base_offset;
    const double n = double(g.dim);

    // Normal derivative of w = |x - O|^2 along the outward normal:
    // dw/dnu = 2 <x - O, nu> = 2 (rho - d (u_t sin + cos)) / v.
    const NodeField dwdnu =
        2.0 * (f.rho - d * (f.ut * g.theta.sin() + g.theta.cos())) / f.v;
    // |grad w|^2 = 4 r^2 splits into normal and tangential parts; the
    // tangential gradient is purely meridional for an axis-aligned O.
    const NodeField grad_tan_sq = 4.0 * snap.r2 - dwdnu.square();

    ReillyTerms terms;
    terms.lhs = sphere_integral(g, snap.H * dwdnu.square() * snap.area_weight);
    terms.rhs = sphere_integral(g, snap.kappa_profile * grad_tan_sq * snap.area_weight) +
                4.0 * n * (n - 1.0) * snap.vol;
    terms.normal_energy = 0.25 * terms.lhs;
    return terms;
}

double support_min(const GeometrySnapshot& snap) {
    return (snap.rho / snap.v).minCoeff();
}

double ros_slack(const RadialShape& shape) {
    const Grid& g = shape.grid;
    const Fields f = differentiate(shape);
    const double n = double(g.dim);
    const double m = n - 2.0;

    // (n-1) v - rho H, expanded so that every term vanishes identically on a
    // centered round sphere (w2 = u_tt = c = 0 there):
    //   [w2 (1 + w2) + u_tt] / v^3 + (n-2)(w2 + c) / v.
    const NodeField rhoH = (f.v.square() - f.utt) / f.v.cube() + m * (1.0 - f.c) / f.v;
    if ((rhoH <= 0.0).any())
        throw LostMeanConvexity("ros_slack: mean curvature is not positive");
    const NodeField diff =
        (f.w2 * (1.0 + f.w2) + f.utt) / f.v.cube() + m * (f.w2 + f.c) / f.v;

    // slack = (n-1) int(1/H) - n vol = int rho^n [(n-1) v - rho H] / (rho H).
    return sphere_integral(g, f.rho.pow(g.dim) * diff / rhoH);
}

} // namespace imcf
