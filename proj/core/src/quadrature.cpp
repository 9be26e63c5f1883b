#include "beltrami/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace beltrami {

namespace {

// 15-point Kronrod nodes on [-1,1] (symmetric; nonnegative half listed)
// with the embedded 7-point Gauss rule on the odd-indexed nodes.
constexpr double kron_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kron_w[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double gauss_w[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
    double integral;
    double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double kron = 0.0, gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fsum;
        if (i == 7) {
            fsum = f(c);
        } else {
            fsum = f(c - hw * kron_x[i]) + f(c + hw * kron_x[i]);
        }
        if (!std::isfinite(fsum)) {
            throw NonFiniteSample("integrand returned a non-finite value near y=" +
                                  std::to_string(c));
        }
        kron += kron_w[i] * fsum;
        if (i % 2 == 1) {
            gauss += gauss_w[i / 2] * fsum;
        }
    }
    kron *= hw;
    gauss *= hw;
    // QUADPACK-style sharpened estimate: (200 d)^{3/2} once d is small
    const double diff = std::abs(kron - gauss);
    double err = diff;
    if (diff > 0.0) {
        const double sharp = std::pow(200.0 * diff, 1.5);
        if (sharp < diff) err = sharp;
    }
    return {kron, err};
}

} // namespace

Interval::Interval(double lo_in, double hi_in) : lo(lo_in), hi(hi_in) {
    if (!(std::isfinite(lo) && std::isfinite(hi)) || !(lo < hi)) {
        throw DomainError("invalid interval [" + std::to_string(lo_in) + ", " +
                          std::to_string(hi_in) + "]");
    }
}

Interval Interval::shrunk(double fraction) const {
    const double m = fraction * length();
    return Interval(lo + m, hi - m);
}

double integrate(const std::function<double(double)>& f, Interval interval,
                 double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("integrate: tol must be positive");
    }

    struct Segment {
        double a, b, integral, error;
    };

    PanelEstimate whole = gk15(f, interval.lo, interval.hi);
    std::vector<Segment> segs{{interval.lo, interval.hi, whole.integral, whole.error}};

    double total = whole.integral;
    double total_err = whole.error;
    const std::size_t max_segments = 4096;

    while (total_err > tol * std::max(1.0, std::abs(total))) {
        if (segs.size() >= max_segments) {
            throw NonConvergence("integrate: subdivision budget exhausted (error " +
                                 std::to_string(total_err) + ")");
        }
        // split the segment with the largest error estimate
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i) {
            if (segs[i].error > segs[worst].error) worst = i;
        }
        Segment s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        if (!(s.a < mid && mid < s.b)) {
            throw NonConvergence("integrate: interval too small to subdivide");
        }
        PanelEstimate left = gk15(f, s.a, mid);
        PanelEstimate right = gk15(f, mid, s.b);
        total += left.integral + right.integral - s.integral;
        total_err += left.error + right.error - s.error;
        segs[worst] = {s.a, mid, left.integral, left.error};
        segs.push_back({mid, s.b, right.integral, right.error});
    }
    return total;
}

AntiderivativeTable::AntiderivativeTable(double lo, double hi,
                                         std::vector<double> values,
                                         std::vector<double> slopes,
                                         double base_point)
    : lo_(lo), hi_(hi), values_(std::move(values)), slopes_(std::move(slopes)),
      base_(base_point) {
    Interval check(lo_, hi_); // validates
    if (values_.size() < 2 || values_.size() != slopes_.size()) {
        throw DomainError("AntiderivativeTable: need matching values/slopes, >= 2 nodes");
    }
    if (!(base_ >= lo_ && base_ <= hi_)) {
        throw OutOfDomain("AntiderivativeTable: base point outside node range");
    }
    h_ = (hi_ - lo_) / static_cast<double>(values_.size() - 1);
}

std::size_t AntiderivativeTable::panel(double y, double& t) const {
    // tolerate a hair of roundoff at the ends
    const double slack = 4.0 * std::numeric_limits<double>::epsilon() *
                         std::max(std::abs(lo_), std::abs(hi_));
    if (y < lo_ - slack || y > hi_ + slack) {
        throw OutOfDomain("table evaluation at y=" + std::to_string(y) +
                          " outside [" + std::to_string(lo_) + ", " +
                          std::to_string(hi_) + "]");
    }
    double yc = std::clamp(y, lo_, hi_);
    auto k = static_cast<std::size_t>((yc - lo_) / h_);
    k = std::min(k, values_.size() - 2);
    t = (yc - node(k)) / h_;
    return k;
}

double AntiderivativeTable::value(double y) const {
    double t;
    const std::size_t k = panel(y, t);
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * values_[k] + h_ * h10 * slopes_[k] + h01 * values_[k + 1] +
           h_ * h11 * slopes_[k + 1];
}

double AntiderivativeTable::derivative(double y) const {
    double t;
    const std::size_t k = panel(y, t);
    const double t2 = t * t;
    const double d00 = (6.0 * t2 - 6.0 * t) / h_;
    const double d10 = 3.0 * t2 - 4.0 * t + 1.0;
    const double d01 = (-6.0 * t2 + 6.0 * t) / h_;
    const double d11 = 3.0 * t2 - 2.0 * t;
    return d00 * values_[k] + d10 * slopes_[k] + d01 * values_[k + 1] +
           d11 * slopes_[k + 1];
}

AntiderivativeTable cumulative(const std::function<double(double)>& f,
                               double base_point, Interval interval, double tol,
                               std::size_t n_nodes) {
    if (n_nodes < 32) {
        throw DomainError("cumulative: n_nodes must be >= 32");
    }
    if (!interval.contains(base_point)) {
        throw OutOfDomain("cumulative: base point outside interval");
    }
    const std::size_t n_panels = n_nodes - 1;
    const double h = interval.length() / static_cast<double>(n_panels);

    std::vector<double> values(n_nodes, 0.0), slopes(n_nodes, 0.0);
    for (std::size_t k = 0; k < n_nodes; ++k) {
        const double yk = interval.lo + static_cast<double>(k) * h;
        slopes[k] = f(yk);
        if (!std::isfinite(slopes[k])) {
            throw NonFiniteSample("cumulative: integrand non-finite at node y=" +
                                  std::to_string(yk));
        }
    }
    for (std::size_t k = 0; k < n_panels; ++k) {
        const double a = interval.lo + static_cast<double>(k) * h;
        values[k + 1] = values[k] + integrate(f, Interval(a, a + h), tol);
    }

    AntiderivativeTable raw(interval.lo, interval.hi, std::move(values),
                            std::move(slopes), base_point);
    // shift so the interpolated value at base_point is exactly zero
    const double shift = raw.value(base_point);
    std::vector<double> shifted(raw.size());
    std::vector<double> slopes2(raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k) {
        shifted[k] = raw.node_value(k) - shift;
        slopes2[k] = raw.node_slope(k);
    }
    return AntiderivativeTable(interval.lo, interval.hi, std::move(shifted),
                               std::move(slopes2), base_point);
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 3 || y_.size() != n) {
        throw DomainError("CubicSpline: need >= 3 matching nodes");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(x_[i] < x_[i + 1])) {
            throw DomainError("CubicSpline: nodes must be strictly increasing");
        }
    }
    // natural boundary conditions, tridiagonal solve for second derivatives
    m_.assign(n, 0.0);
    std::vector<double> u(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double sig = (x_[i] - x_[i - 1]) / (x_[i + 1] - x_[i - 1]);
        const double p = sig * m_[i - 1] + 2.0;
        m_[i] = (sig - 1.0) / p;
        u[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]) -
               (y_[i] - y_[i - 1]) / (x_[i] - x_[i - 1]);
        u[i] = (6.0 * u[i] / (x_[i + 1] - x_[i - 1]) - sig * u[i - 1]) / p;
    }
    for (std::size_t i = n - 1; i-- > 0;) {
        m_[i] = m_[i] * m_[i + 1] + u[i];
    }
}

std::size_t CubicSpline::locate(double q) const {
    const double slack = 4.0 * std::numeric_limits<double>::epsilon() *
                         std::max(std::abs(x_.front()), std::abs(x_.back()));
    if (q < x_.front() - slack || q > x_.back() + slack) {
        throw OutOfDomain("spline evaluation outside node range");
    }
    const double qc = std::clamp(q, x_.front(), x_.back());
    auto it = std::upper_bound(x_.begin(), x_.end(), qc);
    std::size_t k = static_cast<std::size_t>(std::distance(x_.begin(), it));
    if (k > 0) --k;
    return std::min(k, x_.size() - 2);
}

double CubicSpline::value(double q) const {
    const std::size_t k = locate(q);
    const double h = x_[k + 1] - x_[k];
    const double a = (x_[k + 1] - q) / h;
    const double b = (q - x_[k]) / h;
    return a * y_[k] + b * y_[k + 1] +
           ((a * a * a - a) * m_[k] + (b * b * b - b) * m_[k + 1]) * h * h / 6.0;
}

double CubicSpline::derivative(double q) const {
    const std::size_t k = locate(q);
    const double h = x_[k + 1] - x_[k];
    const double a = (x_[k + 1] - q) / h;
    const double b = (q - x_[k]) / h;
    return (y_[k + 1] - y_[k]) / h +
           ((3.0 * b * b - 1.0) * m_[k + 1] - (3.0 * a * a - 1.0) * m_[k]) * h / 6.0;
}

double CubicSpline::second_derivative(double q) const {
    const std::size_t k = locate(q);
    const double h = x_[k + 1] - x_[k];
    const double a = (x_[k + 1] - q) / h;
    const double b = (q - x_[k]) / h;
    return a * m_[k] + b * m_[k + 1];
}

} // namespace beltrami
