#include "beltrami/profile.hpp"

#include <cmath>
#include <sstream>

#include "beltrami/expression.hpp"

namespace beltrami {

namespace {

void scan_profile(const AlphaProfile& p) {
    constexpr std::size_t n_scan = 1025;
    const double h = p.domain.length() / static_cast<double>(n_scan - 1);
    for (std::size_t i = 0; i < n_scan; ++i) {
        const double y = p.domain.lo + static_cast<double>(i) * h;
        const double v = p.value(y);
        const double d = p.deriv(y);
        if (!std::isfinite(v) || v == 0.0) {
            std::ostringstream os;
            os << "alpha '" << p.name << "' is "
               << (std::isfinite(v) ? "zero" : "non-finite") << " at y=" << y;
            throw DomainError(os.str());
        }
        if (!std::isfinite(d)) {
            std::ostringstream os;
            os << "alpha' of '" << p.name << "' is non-finite at y=" << y;
            throw DomainError(os.str());
        }
    }
}

} // namespace

AlphaProfile preset_example_inv_sqrt(Interval domain) {
    if (domain.lo <= -1.0 || domain.hi >= 1.0) {
        throw DomainError("example_inv_sqrt domain must lie strictly inside (-1, 1)");
    }
    AlphaProfile p;
    p.kind = AlphaProfile::Kind::preset;
    p.name = "example_inv_sqrt";
    p.domain = domain;
    p.value = [](double y) { return 1.0 / std::sqrt(1.0 - y * y); };
    p.deriv = [](double y) { return y * std::pow(1.0 - y * y, -1.5); };
    p.deriv2 = [](double y) {
        const double u = 1.0 - y * y;
        return std::pow(u, -1.5) + 3.0 * y * y * std::pow(u, -2.5);
    };
    return p;
}

AlphaProfile preset_constant(double k, Interval domain) {
    if (k == 0.0 || !std::isfinite(k)) {
        throw DomainError("constant alpha must be finite and nonzero");
    }
    AlphaProfile p;
    p.kind = AlphaProfile::Kind::preset;
    p.name = "constant";
    p.domain = domain;
    p.value = [k](double) { return k; };
    p.deriv = [](double) { return 0.0; };
    p.deriv2 = [](double) { return 0.0; };
    return p;
}

AlphaProfile parse_alpha(const std::string& expression, Interval domain) {
    const expr::NodePtr tree = expr::parse(expression);
    const expr::NodePtr d1 = expr::derivative(tree);
    const expr::NodePtr d2 = expr::derivative(d1);

    AlphaProfile p;
    p.kind = AlphaProfile::Kind::expression;
    p.name = expression;
    p.domain = domain;
    p.value = [tree](double y) { return expr::eval(tree, y); };
    p.deriv = [d1](double y) { return expr::eval(d1, y); };
    p.deriv2 = [d2](double y) { return expr::eval(d2, y); };
    scan_profile(p);
    return p;
}

AlphaProfile tabulated_alpha(std::vector<double> y, std::vector<double> alpha) {
    auto spline = std::make_shared<CubicSpline>(std::move(y), std::move(alpha));
    AlphaProfile p;
    p.kind = AlphaProfile::Kind::tabulated;
    p.name = "tabulated";
    p.domain = spline->domain();
    p.value = [spline](double q) { return spline->value(q); };
    p.deriv = [spline](double q) { return spline->derivative(q); };
    p.deriv2 = [spline](double q) { return spline->second_derivative(q); };
    scan_profile(p);
    return p;
}

AntiderivativeTable antiderivative_A(const AlphaProfile& alpha, double y_ref,
                                     double tol, std::size_t n_nodes) {
    if (!alpha.domain.contains(y_ref)) {
        throw OutOfDomain("antiderivative_A: y_ref outside alpha domain");
    }
    return cumulative(alpha.value, y_ref, alpha.domain, tol, n_nodes);
}

GeneratingFunction::GeneratingFunction(AlphaProfile alpha, double c1, double c2,
                                       double y_ref, double quad_tol,
                                       std::size_t n_nodes, double clamp_fraction)
    : alpha_(std::move(alpha)), c1_(c1), c2_(c2), y_ref_(y_ref) {
    if (c1_ == 0.0 && c2_ == 0.0) {
        throw DomainError("generating function requires (c1, c2) != (0, 0)");
    }
    if (!alpha_.domain.contains(y_ref_)) {
        throw OutOfDomain("generating function: y_ref outside alpha domain");
    }
    A_ = std::make_shared<AntiderivativeTable>(
        antiderivative_A(alpha_, y_ref_, quad_tol, n_nodes));

    auto S_raw = [this](double y) {
        const double a = A_->value(y);
        return c1_ * std::sin(a) + c2_ * std::cos(a);
    };

    // Fix the global sign so S >= 0 next to y_ref. S(y_ref) = c2 exactly;
    // when c2 == 0 the window is one-sided and the side follows S'(y_ref).
    double at_ref = S_raw(y_ref_);
    if (at_ref == 0.0) {
        const double slope = alpha_(y_ref_) *
                             (c1_ * std::cos(A_->value(y_ref_)) -
                              c2_ * std::sin(A_->value(y_ref_)));
        at_ref = (y_ref_ < alpha_.domain.hi) ? slope : -slope;
        if (at_ref == 0.0) {
            throw NoPositivityWindow("f0 and f0' both vanish at y_ref");
        }
    }
    if (at_ref < 0.0) {
        c1_ = -c1_;
        c2_ = -c2_;
    }

    // Scan outward from y_ref for the first sign change on each side, then
    // bisect the crossing to 1e-12.
    const auto S_eval = [this](double y) {
        const double a = A_->value(y);
        return c1_ * std::sin(a) + c2_ * std::cos(a);
    };
    constexpr int n_scan = 4096;
    const double step = alpha_.domain.length() / n_scan;

    auto locate_zero = [&](double from, double to) {
        // pre: S(from) > 0, S(to) <= 0; bisect
        double a = from, b = to;
        while (b - a > 1e-12 && a + 0.25 * (b - a) != a) {
            const double m = 0.5 * (a + b);
            if (S_eval(m) > 0.0) a = m; else b = m;
        }
        return 0.5 * (a + b);
    };
    auto locate_zero_rev = [&](double from, double to) {
        // pre: S(from) <= 0, S(to) > 0 with from < to
        double a = from, b = to;
        while (b - a > 1e-12 && a + 0.25 * (b - a) != a) {
            const double m = 0.5 * (a + b);
            if (S_eval(m) > 0.0) b = m; else a = m;
        }
        return 0.5 * (a + b);
    };

    double hi = alpha_.domain.hi;
    bool hi_is_zero = false;
    for (double y = y_ref_ + step; y <= alpha_.domain.hi + 0.5 * step; y += step) {
        const double yc = std::min(y, alpha_.domain.hi);
        if (!(S_eval(yc) > 0.0)) {
            hi = locate_zero(yc - step, yc);
            hi_is_zero = true;
            break;
        }
        if (yc >= alpha_.domain.hi) break;
    }
    double lo = alpha_.domain.lo;
    bool lo_is_zero = false;
    for (double y = y_ref_ - step; y >= alpha_.domain.lo - 0.5 * step; y -= step) {
        const double yc = std::max(y, alpha_.domain.lo);
        if (!(S_eval(yc) > 0.0)) {
            lo = locate_zero_rev(yc, yc + step);
            lo_is_zero = true;
            break;
        }
        if (yc <= alpha_.domain.lo) break;
    }
    // one-sided window when y_ref itself is a zero of S
    if (S_eval(y_ref_) == 0.0) {
        if (S_eval(std::min(y_ref_ + 0.5 * step, alpha_.domain.hi)) > 0.0) {
            lo = y_ref_;
            lo_is_zero = true;
        } else {
            hi = y_ref_;
            hi_is_zero = true;
        }
    }
    if (!(lo < hi)) {
        throw NoPositivityWindow("no positive window of c1 sin A + c2 cos A next to y_ref");
    }
    positivity_ = Interval(lo, hi);

    const double margin = clamp_fraction * positivity_.length();
    double tlo = lo_is_zero ? lo + margin : lo;
    double thi = hi_is_zero ? hi - margin : hi;
    if (!(tlo < thi)) {
        throw NoPositivityWindow("positivity window too narrow after clamping");
    }
    table_interval_ = Interval(tlo, thi);
}

GeneratingFunction GeneratingFunction::trivial(Interval domain) {
    GeneratingFunction g;
    g.alpha_ = preset_constant(1.0, domain);
    g.c1_ = 0.0;
    g.c2_ = 1.0;
    g.y_ref_ = domain.midpoint();
    g.positivity_ = domain;
    g.table_interval_ = domain;
    g.trivial_ = true;
    return g;
}

double GeneratingFunction::S(double y) const {
    if (trivial_) return 1.0;
    const double a = A_->value(y);
    return c1_ * std::sin(a) + c2_ * std::cos(a);
}

double GeneratingFunction::S_deriv(double y) const {
    if (trivial_) return 0.0;
    const double a = A_->value(y);
    return alpha_(y) * (c1_ * std::cos(a) - c2_ * std::sin(a));
}

double GeneratingFunction::S_deriv2(double y) const {
    if (trivial_) return 0.0;
    // S'' = (alpha'/alpha) S' - alpha^2 S
    const double a = alpha_(y);
    return (alpha_.deriv(y) / a) * S_deriv(y) - a * a * S(y);
}

double GeneratingFunction::f0(double y) const {
    if (trivial_) return 1.0;
    return S(y) / std::sqrt(alpha_(y));
}

double GeneratingFunction::f0_deriv(double y) const {
    if (trivial_) return 0.0;
    const double a = alpha_(y);
    const double sa = std::sqrt(a);
    return S_deriv(y) / sa - 0.5 * S(y) * alpha_.deriv(y) / (a * sa);
}

double GeneratingFunction::f0_sq(double y) const {
    if (trivial_) return 1.0;
    const double s = S(y);
    return s * s / alpha_(y);
}

std::function<double(double)> schrodinger_potential(const AlphaProfile& alpha) {
    AlphaProfile a = alpha;
    return [a](double y) {
        if (!a.domain.contains(y)) {
            throw DomainError("schrodinger_potential: y outside alpha domain");
        }
        const double v = a.value(y);
        const double d = a.deriv(y);
        const double dd = a.deriv2(y);
        const double ratio = d / v;
        return -0.5 * dd / v + 0.75 * ratio * ratio - v * v;
    };
}

std::function<std::complex<double>(double)>
vekua_coefficient(const GeneratingFunction& g) {
    GeneratingFunction gf = g;
    return [gf](double y) {
        if (!gf.positivity().contains(y)) {
            throw OutOfDomain("vekua_coefficient: y outside positivity window");
        }
        return std::complex<double>(0.0, 0.5 * gf.f0_deriv(y) / gf.f0(y));
    };
}

} // namespace beltrami
