#pragma once

#include <Eigen/Dense>

namespace imcf {

/// All node data lives in dense double arrays; fields are paired with a Grid by context.
using NodeField = Eigen::ArrayXd;
using Eigen::Index;

enum class GridKind {
    Periodic, // closed curves in the plane: nodes i*h, h = 2*pi/N, wrap-around
    Polar     // axisymmetric hypersurfaces, polar angle: nodes i*h, h = pi/(N-1), poles included
};

/// Measure of the unit sphere S^m in R^{m+1} (|S^0| = 2, |S^1| = 2*pi, |S^2| = 4*pi, ...).
double sphere_surface_measure(int m);

/// Uniform 1-D angular grid. For polar grids the ambient dimension fixes the
/// sin^{n-2} quadrature weight; periodic grids are always ambient n = 2.
struct Grid {
    GridKind kind;
    int dim;         // ambient dimension n
    Index node_count;
    double spacing;  // h
    NodeField theta; // node angles
    NodeField quad;  // quadrature weights: sphere_integral(f) = sum_i quad[i]*f[i]

    static Grid periodic(Index N);
    static Grid polar(Index N, int dim);

    /// Nested refinement: 2N nodes (periodic) or 2N-1 (polar); old nodes are kept.
    Grid refined() const;
};

/// Centered second-order finite difference of order 1 or 2.
/// Polar grids treat the field as even at the poles (reflection ghosts), so
/// the first derivative is exactly zero at theta = 0 and theta = pi.
NodeField derivative(const Grid& g, const Eigen::Ref<const NodeField>& f, int order);

/// Integral of f (a function of the polar angle alone) over the unit sphere S^{n-1}.
/// Periodic: h * sum f_i. Polar: weights are exact hat-basis moments against
/// sin^{n-2} theta, so the weight itself is integrated exactly (constants give the
/// exact sphere measure; smooth fields are O(h^2), matching the scheme order).
double sphere_integral(const Grid& g, const Eigen::Ref<const NodeField>& f);

} // namespace imcf
