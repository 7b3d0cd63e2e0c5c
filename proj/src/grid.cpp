#include "imcf/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "imcf/errors.hpp"

namespace imcf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Index kMinNodes = 16;

// Antiderivatives S_m(x) = int sin^m x dx and T_m(x) = int x sin^m x dx via the
// textbook reduction formulas. Used to integrate the hat basis exactly against
// the sin^{n-2} weight on each cell.
struct SinMoments {
    double s; // S_m(x)
    double t; // T_m(x)
};

SinMoments sin_moments(int m, double x) {
    const double sx = std::sin(x);
    const double cx = std::cos(x);
    // S_0, S_1 and U_m = int S_m dx (so that T_m = x S_m - U_m).
    double s_prev = x, s_cur = -cx;
    double u_prev = 0.5 * x * x, u_cur = -sx;
    if (m == 0) return {s_prev, x * s_prev - u_prev};
    for (int k = 2; k <= m; ++k) {
        const double sk = (-std::pow(sx, k - 1) * cx + (k - 1) * s_prev) / k;
        const double uk = -std::pow(sx, k) / double(k * k) + (double(k - 1) / k) * u_prev;
        s_prev = s_cur;
        s_cur = sk;
        u_prev = u_cur;
        u_cur = uk;
    }
    return {s_cur, x * s_cur - u_cur};
}

NodeField polar_weights(const NodeField& theta, int dim) {
    const int m = dim - 2;
    const Index N = theta.size();
    const double h = theta(1) - theta(0);
    NodeField w = NodeField::Zero(N);
    for (Index i = 0; i + 1 < N; ++i) {
        const double a = theta(i), b = theta(i + 1);
        const SinMoments ma = sin_moments(m, a), mb = sin_moments(m, b);
        const double i0 = mb.s - ma.s; // int_a^b sin^m
        const double i1 = mb.t - ma.t; // int_a^b x sin^m
        w(i) += (b * i0 - i1) / h;
        w(i + 1) += (i1 - a * i0) / h;
    }
    // Enforce the mirror symmetry w_i = w_{N-1-i} exactly (the antiderivative
    // evaluations at mirrored nodes differ by a few ulp otherwise).
    w = 0.5 * (w + w.reverse()).eval();
    return w * sphere_surface_measure(m);
}

void require_finite(const Eigen::Ref<const NodeField>& f, const char* op) {
    if (!f.allFinite()) throw InvalidField(std::string(op) + ": field has non-finite entries");
}

void require_size(const Grid& g, const Eigen::Ref<const NodeField>& f, const char* op) {
    if (f.size() != g.node_count)
        throw InvalidField(std::string(op) + ": field length " + std::to_string(f.size()) +
                           " does not match grid node count " + std::to_string(g.node_count));
}

} // namespace

double sphere_surface_measure(int m) {
    if (m < 0) throw InvalidSpec("sphere_surface_measure: dimension must be >= 0");
    return 2.0 * std::pow(kPi, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
}

Grid Grid::periodic(Index N) {
    if (N < kMinNodes) throw InvalidSpec("Grid::periodic: need at least 16 nodes");
    Grid g;
    g.kind = GridKind::Periodic;
    g.dim = 2;
    g.node_count = N;
    g.spacing = 2.0 * kPi / double(N);
    g.theta = g.spacing * NodeField::LinSpaced(N, 0.0, double(N - 1));
    g.quad = NodeField::Constant(N, g.spacing);
    return g;
}

Grid Grid::polar(Index N, int dim) {
    if (N < kMinNodes) throw InvalidSpec("Grid::polar: need at least 16 nodes");
    if (dim < 3) throw InvalidSpec("Grid::polar: polar grids require ambient dimension >= 3");
    Grid g;
    g.kind = GridKind::Polar;
    g.dim = dim;
    g.node_count = N;
    g.spacing = kPi / double(N - 1);
    g.theta = g.spacing * NodeField::LinSpaced(N, 0.0, double(N - 1));
    g.theta(N - 1) = kPi; // pin the south pole exactly
    g.quad = polar_weights(g.theta, dim);
    return g;
}

Grid Grid::refined() const {
    return kind == GridKind::Periodic ? periodic(2 * node_count)
                                      : polar(2 * node_count - 1, dim);
}

NodeField derivative(const Grid& g, const Eigen::Ref<const NodeField>& f, int order) {
    if (order != 1 && order != 2) throw InvalidSpec("derivative: order must be 1 or 2");
    require_size(g, f, "derivative");
    require_finite(f, "derivative");
    const Index N = g.node_count;
    const double h = g.spacing;
    NodeField out(N);
    if (g.kind == GridKind::Periodic) {
        for (Index i = 0; i < N; ++i) {
            const Index ip = (i + 1 == N) ? 0 : i + 1;
            const Index im = (i == 0) ? N - 1 : i - 1;
            out(i) = (order == 1) ? (f(ip) - f(im)) / (2.0 * h)
                                  : (f(ip) - 2.0 * f(i) + f(im)) / (h * h);
        }
    } else {
        for (Index i = 1; i + 1 < N; ++i) {
            out(i) = (order == 1) ? (f(i + 1) - f(i - 1)) / (2.0 * h)
                                  : (f(i + 1) - 2.0 * f(i) + f(i - 1)) / (h * h);
        }
        // Reflection ghosts f_{-1} = f_1, f_N = f_{N-2}: even data through the poles.
        if (order == 1) {
            out(0) = 0.0;
            out(N - 1) = 0.0;
        } else {
            out(0) = 2.0 * (f(1) - f(0)) / (h * h);
            out(N - 1) = 2.0 * (f(N - 2) - f(N - 1)) / (h * h);
        }
    }
    return out;
}

double sphere_integral(const Grid& g, const Eigen::Ref<const NodeField>& f) {
    require_size(g, f, "sphere_integral");
    require_finite(f, "sphere_integral");
    return (g.quad * f).sum();
}

} // namespace imcf
