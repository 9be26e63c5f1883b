#include "beltrami/fields.hpp"

#include <cmath>

namespace beltrami {

void ProbeGrid::validate(int min_points) const {
    if (nx < min_points || ny < min_points) {
        throw DimensionMismatch("probe grid needs at least " +
                                std::to_string(min_points) + " points per axis");
    }
    if (!(x_lo < x_hi) || !(y_lo < y_hi)) {
        throw DomainError("probe grid bounds must be increasing");
    }
}

ScalarField2D ScalarField2D::constant(double c) {
    ScalarField2D f;
    f.value = [c](double, double) { return c; };
    f.grad = [](double, double) { return Vec2{0.0, 0.0}; };
    return f;
}

Vec2 grad_or_fd(const ScalarField2D& f, double x, double y, double h) {
    if (f.has_grad()) return f.grad(x, y);
    const auto d = [&](bool in_x) {
        auto at = [&](double s) {
            return in_x ? f.value(x + s, y) : f.value(x, y + s);
        };
        return (-at(2.0 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2.0 * h)) /
               (12.0 * h);
    };
    return Vec2{d(true), d(false)};
}

namespace {

template <typename T>
inline T stencil_dx(const std::vector<T>& s, const ProbeGrid& g, int i, int j) {
    const auto at = [&](int ii) { return s[static_cast<std::size_t>(ii) * g.ny + j]; };
    return (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) /
           (12.0 * g.hx());
}

template <typename T>
inline T stencil_dy(const std::vector<T>& s, const ProbeGrid& g, int i, int j) {
    const auto at = [&](int jj) { return s[static_cast<std::size_t>(i) * g.ny + jj]; };
    return (-at(j + 2) + 8.0 * at(j + 1) - 8.0 * at(j - 1) + at(j - 2)) /
           (12.0 * g.hy());
}

} // namespace

double fd_dx(const std::vector<double>& s, const ProbeGrid& g, int i, int j) {
    return stencil_dx(s, g, i, j);
}
double fd_dy(const std::vector<double>& s, const ProbeGrid& g, int i, int j) {
    return stencil_dy(s, g, i, j);
}
Complex fd_dx(const std::vector<Complex>& s, const ProbeGrid& g, int i, int j) {
    return stencil_dx(s, g, i, j);
}
Complex fd_dy(const std::vector<Complex>& s, const ProbeGrid& g, int i, int j) {
    return stencil_dy(s, g, i, j);
}

double fd_dxx(const std::vector<double>& s, const ProbeGrid& g, int i, int j) {
    const auto at = [&](int ii) { return s[static_cast<std::size_t>(ii) * g.ny + j]; };
    const double h2 = g.hx() * g.hx();
    return (-at(i + 2) + 16.0 * at(i + 1) - 30.0 * at(i) + 16.0 * at(i - 1) -
            at(i - 2)) /
           (12.0 * h2);
}

double fd_dyy(const std::vector<double>& s, const ProbeGrid& g, int i, int j) {
    const auto at = [&](int jj) { return s[static_cast<std::size_t>(i) * g.ny + jj]; };
    const double h2 = g.hy() * g.hy();
    return (-at(j + 2) + 16.0 * at(j + 1) - 30.0 * at(j) + 16.0 * at(j - 1) -
            at(j - 2)) /
           (12.0 * h2);
}

double elliptic_residual(const ScalarField2D& u, const ScalarField2D& p,
                         const ScalarField2D& q, const ProbeGrid& grid) {
    grid.validate(5);
    const std::vector<double> us = sample_grid(grid, u.value);
    for (double v : us) {
        if (!std::isfinite(v)) throw NonFiniteSample("elliptic_residual: field sample");
    }
    double sup = 0.0;
    for (int i = 2; i < grid.nx - 2; ++i) {
        for (int j = 2; j < grid.ny - 2; ++j) {
            const double x = grid.x(i), y = grid.y(j);
            const double lap = fd_dxx(us, grid, i, j) + fd_dyy(us, grid, i, j);
            const Vec2 gu{fd_dx(us, grid, i, j), fd_dy(us, grid, i, j)};
            const Vec2 gp = grad_or_fd(p, x, y);
            const double r = p.value(x, y) * lap + gp.x * gu.x + gp.y * gu.y +
                             q.value(x, y) * us[static_cast<std::size_t>(i) * grid.ny + j];
            sup = std::max(sup, std::abs(r));
        }
    }
    return sup;
}

} // namespace beltrami
