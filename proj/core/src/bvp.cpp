#include "beltrami/bvp.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

namespace beltrami {

std::vector<Vec2> circle_points(Vec2 center, double r, int count) {
    if (count < 3 || !(r > 0.0)) {
        throw DomainError("circle_points: need r > 0 and count >= 3");
    }
    std::vector<Vec2> pts(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double t = 2.0 * std::numbers::pi * k / count;
        pts[static_cast<std::size_t>(k)] = {center.x + r * std::cos(t),
                                            center.y + r * std::sin(t)};
    }
    return pts;
}

std::vector<Vec2> rectangle_points(Vec2 lo, Vec2 hi, int count) {
    if (count < 4 || !(lo.x < hi.x) || !(lo.y < hi.y)) {
        throw DomainError("rectangle_points: need lo < hi and count >= 4");
    }
    const double w = hi.x - lo.x, h = hi.y - lo.y;
    const double per = 2.0 * (w + h);
    std::vector<Vec2> pts(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        double s = per * k / count;
        Vec2 p;
        if (s < w) {
            p = {lo.x + s, lo.y};
        } else if ((s -= w) < h) {
            p = {hi.x, lo.y + s};
        } else if ((s -= h) < w) {
            p = {hi.x - s, hi.y};
        } else {
            s -= w;
            p = {lo.x, hi.y - s};
        }
        pts[static_cast<std::size_t>(k)] = p;
    }
    return pts;
}

FitResult fit(const CollocationProblem& problem,
              const std::vector<ScalarBasisElement>& basis) {
    const int k = 2 * problem.n_max + 1;
    if (static_cast<int>(basis.size()) < k) {
        throw DimensionMismatch("fit: basis has fewer elements than 2 n_max + 1");
    }
    const auto m = static_cast<Eigen::Index>(problem.boundary.size());
    if (problem.data.size() != problem.boundary.size()) {
        throw DimensionMismatch("fit: boundary and data lengths differ");
    }
    if (m < 2 * k) {
        throw DimensionMismatch("fit: need at least 2 (2 n_max + 1) boundary points");
    }
    if (problem.regularization < 0.0) {
        throw DomainError("fit: regularization must be nonnegative");
    }

    Eigen::MatrixXd A(m, k);
    Eigen::VectorXd b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const Vec2 p = problem.boundary[static_cast<std::size_t>(i)];
        for (int j = 0; j < k; ++j) {
            A(i, j) = basis[static_cast<std::size_t>(j)].field.value(p.x, p.y);
        }
        b(i) = problem.data[static_cast<std::size_t>(i)];
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    const Eigen::VectorXd diag = qr.matrixR().diagonal().cwiseAbs();
    const double cond =
        diag.minCoeff() > 0.0
            ? diag.maxCoeff() / diag.minCoeff()
            : std::numeric_limits<double>::infinity();
    if (problem.regularization == 0.0 && cond > 1e14) {
        throw IllConditioned(
            "fit: condition estimate " + std::to_string(cond) +
            " exceeds 1e14; add regularization or reduce n_max");
    }

    Eigen::VectorXd coef;
    if (problem.regularization > 0.0) {
        // Tikhonov via the stacked system [A; sqrt(reg) I] — still solved
        // through an orthogonal factorization
        Eigen::MatrixXd As(m + k, k);
        As.topRows(m) = A;
        As.bottomRows(k) =
            std::sqrt(problem.regularization) * Eigen::MatrixXd::Identity(k, k);
        Eigen::VectorXd bs(m + k);
        bs.head(m) = b;
        bs.tail(k).setZero();
        coef = As.colPivHouseholderQr().solve(bs);
    } else {
        coef = qr.solve(b);
    }

    const double misfit = (A * coef - b).norm();
    const double scale = b.norm();

    FitResult out;
    out.coefficients.assign(coef.data(), coef.data() + coef.size());
    out.condition_estimate = cond;
    out.boundary_residual = scale > 0.0 ? misfit / scale : misfit;
    out.solution.core = basis.front().core;
    out.solution.coefficients.assign(static_cast<std::size_t>(problem.n_max) + 1,
                                     {0.0, 0.0});
    for (int j = 0; j < k; ++j) {
        const auto [n, flavor] = basis_index_map(j);
        auto& slot = out.solution.coefficients[static_cast<std::size_t>(n)];
        (flavor == Flavor::unit ? slot.first : slot.second) = coef(j);
    }
    return out;
}

InteriorReport evaluate_interior(const SeriesSolution& solution,
                                 const ProbeGrid& grid) {
    grid.validate(2);
    if (!solution.core) throw DomainError("evaluate_interior: empty basis core");
    InteriorReport out;
    out.field.reserve(static_cast<std::size_t>(grid.nx) * grid.ny);
    for (int i = 0; i < grid.nx; ++i) {
        for (int j = 0; j < grid.ny; ++j) {
            out.field.push_back(
                series_field(solution, Complex(grid.x(i), grid.y(j))));
        }
    }
    const BeltramiFieldElement assembled = series_as_field(solution);
    const AlphaProfile& profile = solution.core->profile();
    out.residuals = beltrami_residual(assembled, profile, grid);
    out.div_residual = div_alpha_residual(assembled, profile, grid);
    return out;
}

} // namespace beltrami
