#pragma once

#include "imcf/grid.hpp"
#include "imcf/shapes.hpp"

namespace imcf {

// Everything the monitors need about one hypersurface, evaluated once: the
// per-node profile fields and the integrated quantities derived from them.
struct GeometrySnapshot {
    // Per-node fields (principal curvature in the profile plane, the repeated
    // orbit curvature, squared norm of the second fundamental form, ...).
    NodeField rho;           // radius exp(u)
    NodeField v;             // sqrt(1 + u_theta^2)
    NodeField H;             // mean curvature (sum of principal curvatures)
    NodeField kappa_profile; // curvature of the generating curve
    NodeField kappa_orbit;   // curvature in the rotated directions (dim-2 copies)
    NodeField ii_sq;         // |II|^2 = kappa_profile^2 + (dim-2) kappa_orbit^2
    NodeField area_weight;   // surface measure density: rho^{dim-1} v (per quad weight)
    NodeField r2;            // squared distance to the displaced reference point
    NodeField normal_radial; // <nu, radial direction> = 1/v

    // Integrated quantities.
    double vol = 0.0;      // enclosed volume
    double area = 0.0;     // surface area
    double int_r2H = 0.0;  // integral of r^2 H
    double int_invH = 0.0; // integral of 1/H
    double q_raw = 0.0;     // dim * vol - int_r2H / (dim - 1), evaluated in fused form
    double roundness = 0.0; // (max rho - min rho) / mean rho, zero for centered spheres

    int dim = 0;
    double base_offset = 0.0;
};

// Per-node fields only (curvatures, measure density, distance field).
GeometrySnapshot curvatures(const RadialShape& shape);

// Fields plus all integrals.
GeometrySnapshot analyze(const RadialShape& shape);

// The scale-normalized monotone quantity: q_raw damped by the exponential
// factor that makes it constant along the flow of a round sphere.
double q_value(const GeometrySnapshot& snap, double t);

// Both sides of the boundary integral identity satisfied by the squared
// distance w = r^2 to the reference point: the normal-derivative energy on the
// left against the tangential second-fundamental-form energy plus a volume
// term on the right. Also carries the normal-energy integral needed by the
// convexity-chain diagnostic.
struct ReillyTerms {
    double lhs = 0.0;         // int H (dw/dnu)^2 dmu
    double rhs = 0.0;         // int II(grad_S w, grad_S w) dmu + 4 dim (dim-1) vol
    double normal_energy = 0.0; // (1/4) lhs, kept separately for the chain check
};

ReillyTerms reilly_terms(const RadialShape& shape);

// Minimum over nodes of the support function <x - p, nu> = rho / v; positive
// iff the surface is star-shaped about the flow origin.
double support_min(const GeometrySnapshot& snap);

// Integrated slack of the curvature-harmonic comparison,
//   (dim-1) int (1/H) dmu - dim vol,
// evaluated in a fused per-node form so a centered round sphere gives exactly
// zero instead of the difference of two large integrals.
double ros_slack(const RadialShape& shape);

// Relative quadrature tolerance: max(1e-8, 50 h^2).
double eps_quad_rel(double spacing);
double eps_quad_rel(const Grid& grid);

} // namespace imcf
