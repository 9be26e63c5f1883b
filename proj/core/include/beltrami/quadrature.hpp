#pragma once

#include <functional>
#include <vector>

#include "beltrami/errors.hpp"

namespace beltrami {

/// Closed interval [lo, hi] with lo < hi, both finite.
struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_);

    double length() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double y) const { return y >= lo && y <= hi; }
    /// Sub-interval shrunk by `fraction * length()` on each side.
    Interval shrunk(double fraction) const;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over `interval`.
/// The estimated error is kept below tol * max(1, |I|).
double integrate(const std::function<double(double)>& f, Interval interval,
                 double tol = 1e-10);

/// Piecewise-cubic antiderivative table on uniform nodes.
///
/// Stores values and slopes; the slope at node y_k equals the integrand
/// f(y_k), so the Hermite interpolant reproduces the integrand exactly at
/// the nodes and the table value is the panel-accumulated integral
/// anchored to 0 at base_point.
class AntiderivativeTable {
public:
    AntiderivativeTable(double lo, double hi, std::vector<double> values,
                        std::vector<double> slopes, double base_point);

    double value(double y) const;
    double derivative(double y) const;
    double operator()(double y) const { return value(y); }

    double base_point() const { return base_; }
    Interval domain() const { return Interval(lo_, hi_); }
    std::size_t size() const { return values_.size(); }
    double node(std::size_t k) const { return lo_ + static_cast<double>(k) * h_; }
    double node_value(std::size_t k) const { return values_[k]; }
    double node_slope(std::size_t k) const { return slopes_[k]; }
    double step() const { return h_; }

private:
    // locate the panel containing y (throws OutOfDomain)
    std::size_t panel(double y, double& t) const;

    double lo_, hi_, h_;
    std::vector<double> values_;
    std::vector<double> slopes_;
    double base_;
};

/// Cumulative antiderivative T(y) = int_{base_point}^{y} f, tabulated on
/// n_nodes uniform nodes spanning `interval`. Each panel integral is
/// evaluated adaptively to `tol`; values are prefix sums shifted so that
/// T(base_point) evaluates to exactly 0.
AntiderivativeTable cumulative(const std::function<double(double)>& f,
                               double base_point, Interval interval,
                               double tol = 1e-10, std::size_t n_nodes = 2049);

/// Natural cubic spline through arbitrary strictly increasing nodes.
/// Used for tabulated alpha profiles; exposes first and second derivatives.
class CubicSpline {
public:
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double value(double q) const;
    double derivative(double q) const;
    double second_derivative(double q) const;

    Interval domain() const { return Interval(x_.front(), x_.back()); }

private:
    std::size_t locate(double q) const;

    std::vector<double> x_, y_, m_; // m_ = second derivatives at nodes
};

} // namespace beltrami
