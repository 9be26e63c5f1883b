#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "beltrami/errors.hpp"

namespace beltrami {

using Complex = std::complex<double>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Uniform rectangular probe grid.
struct ProbeGrid {
    double x_lo = 0.0, x_hi = 1.0;
    int nx = 2;
    double y_lo = 0.0, y_hi = 1.0;
    int ny = 2;

    double hx() const { return (x_hi - x_lo) / (nx - 1); }
    double hy() const { return (y_hi - y_lo) / (ny - 1); }
    double x(int i) const { return x_lo + i * hx(); }
    double y(int j) const { return y_lo + j * hy(); }

    void validate(int min_points = 2) const;
};

/// Real scalar field on the plane; `grad` may be empty, in which case
/// consumers fall back to finite differences.
struct ScalarField2D {
    std::function<double(double, double)> value;
    std::function<Vec2(double, double)> grad;

    bool has_grad() const { return static_cast<bool>(grad); }
    static ScalarField2D constant(double c);
};

/// Complex field with optional analytic partials (dx, dy).
struct ComplexField2D {
    std::function<Complex(double, double)> value;
    std::function<std::pair<Complex, Complex>(double, double)> partials;
    ProbeGrid grid;

    bool has_partials() const { return static_cast<bool>(partials); }
};

/// Gradient of `f` at (x, y): analytic when available, otherwise 4th-order
/// central differences with step h.
Vec2 grad_or_fd(const ScalarField2D& f, double x, double y, double h = 1e-4);

/// Row-major samples of a callable on a grid; throws NonFiniteSample on
/// NaN/Inf.
template <typename F>
std::vector<std::invoke_result_t<F, double, double>>
sample_grid(const ProbeGrid& g, F&& f) {
    std::vector<std::invoke_result_t<F, double, double>> out;
    out.reserve(static_cast<std::size_t>(g.nx) * g.ny);
    for (int i = 0; i < g.nx; ++i) {
        for (int j = 0; j < g.ny; ++j) {
            out.push_back(f(g.x(i), g.y(j)));
        }
    }
    return out;
}

/// 4th-order central x/y-derivative of row-major samples at an interior
/// point (i, j); valid for 2 <= i < nx-2 (resp. j).
double fd_dx(const std::vector<double>& s, const ProbeGrid& g, int i, int j);
double fd_dy(const std::vector<double>& s, const ProbeGrid& g, int i, int j);
Complex fd_dx(const std::vector<Complex>& s, const ProbeGrid& g, int i, int j);
Complex fd_dy(const std::vector<Complex>& s, const ProbeGrid& g, int i, int j);

/// 4th-order second derivatives at interior points.
double fd_dxx(const std::vector<double>& s, const ProbeGrid& g, int i, int j);
double fd_dyy(const std::vector<double>& s, const ProbeGrid& g, int i, int j);

/// sup of |div(p grad u) + q u| over interior grid points, expanded as
/// p Laplacian(u) + grad p . grad u + q u with 4th-order stencils for u
/// and analytic (or FD) gradients for p.
double elliptic_residual(const ScalarField2D& u, const ScalarField2D& p,
                         const ScalarField2D& q, const ProbeGrid& grid);

} // namespace beltrami
