#pragma once

#include <vector>

#include "imcf/grid.hpp"
#include "imcf/report.hpp"

namespace imcf {

enum class ShapeKind { Sphere, OffsetSphere, Spheroid, PerturbedSphere };

// One Fourier / axisymmetric mode added to log(radius): amplitude * cos(mode * theta).
struct PerturbMode {
    int mode = 2;
    double amplitude = 0.0;
};

struct ShapeSpec {
    ShapeKind kind = ShapeKind::Sphere;
    int dim = 3;            // ambient dimension n >= 2
    Index resolution = 129; // node count N
    double radius = 1.0;    // Sphere / OffsetSphere / PerturbedSphere base radius
    double offset = 0.0;    // OffsetSphere: center displaced along the polar axis
    double axis_a = 1.5;    // Spheroid: semi-axis along the symmetry axis
    double axis_b = 1.0;    // Spheroid: equatorial semi-axis
    std::vector<PerturbMode> modes;
};

// A hypersurface given as a graph over the round sphere: radius rho = exp(u)
// about a fixed origin, plus the displacement d of the reference point whose
// distance field the monitors integrate. The flow never changes d.
struct RadialShape {
    Grid grid;
    NodeField u;
    double base_offset = 0.0;
};

RadialShape build(const ShapeSpec& spec);

// Sphere of radius R centered at distance c along the axis, as a radial graph
// about the origin: rho(theta) = c cos(theta) + sqrt(R^2 - c^2 sin^2(theta)).
RadialShape displaced_sphere(double R, double c, int dim, Index N);

// Well-posedness screen: finite fields, mean curvature above the floor, and
// the star-shapedness margin (the minimum of the support function, positive by
// construction for radial graphs but reported so callers see how close a
// large perturbation comes to losing it).
CheckReport validate(const RadialShape& shape, double H_min = 1e-6);

} // namespace imcf
