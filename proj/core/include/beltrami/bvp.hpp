#pragma once

#include <vector>

#include "beltrami/beltrami.hpp"

namespace beltrami {

/// Dirichlet data for B3 on a closed curve inside the validity region,
/// fitted by least squares against the truncated basis.
struct CollocationProblem {
    std::vector<Vec2> boundary;
    std::vector<double> data;
    int n_max = 0;
    double regularization = 0.0;
};

/// `count` points uniform in angle on the circle of radius r about center.
std::vector<Vec2> circle_points(Vec2 center, double r, int count);

/// `count` points uniform in arc length along an axis-aligned rectangle.
std::vector<Vec2> rectangle_points(Vec2 lo, Vec2 hi, int count);

struct FitResult {
    SeriesSolution solution;
    std::vector<double> coefficients;  // one per basis element (index_map order)
    double boundary_residual = 0.0;    // relative l2 misfit on the boundary
    double condition_estimate = 0.0;   // from the column-pivoted QR of A
};

/// Least-squares fit of the boundary data in the span of `basis`
/// (orthogonal factorization; normal equations are never formed).
/// Requires at least 2 * (2 n_max + 1) boundary points. With zero
/// regularization a condition estimate above 1e14 raises IllConditioned.
FitResult fit(const CollocationProblem& problem,
              const std::vector<ScalarBasisElement>& basis);

struct InteriorReport {
    std::vector<std::array<double, 3>> field; // B1,B2,B3 per grid point, row-major
    BeltramiResiduals residuals;
    double div_residual = 0.0;
};

/// Evaluate the fitted series on a grid and run the residual operators.
InteriorReport evaluate_interior(const SeriesSolution& solution,
                                 const ProbeGrid& grid);

} // namespace beltrami
