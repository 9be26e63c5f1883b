#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "beltrami/quadrature.hpp"

namespace beltrami {

/// Proportionality factor alpha(y): nonvanishing and C^1 on its domain,
/// with first and second derivatives available (analytic for presets,
/// symbolic for parsed expressions, spline-based for tabulated data).
struct AlphaProfile {
    enum class Kind { preset, expression, tabulated };

    Kind kind = Kind::preset;
    std::string name;
    Interval domain{-1.0, 1.0};
    std::function<double(double)> value;
    std::function<double(double)> deriv;
    std::function<double(double)> deriv2;

    double operator()(double y) const { return value(y); }
};

/// alpha(y) = 1 / sqrt(1 - y^2) on a domain clamped inside (-1, 1).
AlphaProfile preset_example_inv_sqrt(Interval domain = Interval(-0.95, 0.95));

/// alpha(y) = k (k != 0).
AlphaProfile preset_constant(double k, Interval domain);

/// Parse alpha from expression text; rejects expressions that evaluate
/// non-finite or vanish anywhere on a 1025-point scan of `domain`.
AlphaProfile parse_alpha(const std::string& expression, Interval domain);

/// Cubic-spline profile through (y, alpha) samples; derivatives come from
/// the spline. Runs the same 1025-point domain scan as parse_alpha.
AlphaProfile tabulated_alpha(std::vector<double> y, std::vector<double> alpha);

/// Antiderivative A of alpha with A(y_ref) = 0.
AntiderivativeTable antiderivative_A(const AlphaProfile& alpha, double y_ref,
                                     double tol = 1e-10,
                                     std::size_t n_nodes = 2049);

/// f0(y) = (c1 sin A + c2 cos A) / sqrt(alpha), the explicit particular
/// solution of the one-variable equation f0'' - r f0 = 0, restricted to a
/// window where S = c1 sin A + c2 cos A is positive.
///
/// The window is the maximal sign-definite interval next to y_ref (the
/// global sign is flipped if S(y_ref) < 0, so f0 > 0 on it). y_ref itself
/// may sit on a zero of S, in which case the window is one-sided. Window
/// endpoints that are zeros of S are pulled inward by `clamp_fraction` of
/// the window width to keep 1/f0^2 integrable on the tabulation interval.
class GeneratingFunction {
public:
    GeneratingFunction(AlphaProfile alpha, double c1, double c2, double y_ref,
                       double quad_tol = 1e-10, std::size_t n_nodes = 2049,
                       double clamp_fraction = 0.02);

    /// The degenerate pair f0 == 1 (used for the analytic formal powers
    /// *Z^(n) = a (z - z0)^n); not tied to any alpha profile.
    static GeneratingFunction trivial(Interval domain);

    double f0(double y) const;
    double f0_deriv(double y) const;
    double f0_sq(double y) const;

    /// S(y) = c1 sin A + c2 cos A = sqrt(alpha) * f0 and its derivatives.
    double S(double y) const;
    double S_deriv(double y) const;
    double S_deriv2(double y) const;

    double c1() const { return c1_; }
    double c2() const { return c2_; }
    double y_ref() const { return y_ref_; }
    bool is_trivial() const { return trivial_; }

    const AlphaProfile& alpha() const { return alpha_; }
    const AntiderivativeTable& A() const { return *A_; }

    /// Open window on which f0 > 0.
    Interval positivity() const { return positivity_; }
    /// Positivity window clamped away from endpoint zeros of S; every
    /// table in the recursion machinery lives on this interval.
    Interval table_interval() const { return table_interval_; }

private:
    GeneratingFunction() = default;

    AlphaProfile alpha_;
    std::shared_ptr<const AntiderivativeTable> A_;
    double c1_ = 0.0, c2_ = 1.0;
    double y_ref_ = 0.0;
    Interval positivity_{-1.0, 1.0};
    Interval table_interval_{-1.0, 1.0};
    bool trivial_ = false;
};

/// One-variable Schroedinger potential
///   r(y) = -alpha''/(2 alpha) + (3/4)(alpha'/alpha)^2 - alpha^2.
/// The returned callable throws DomainError outside alpha.domain.
std::function<double(double)> schrodinger_potential(const AlphaProfile& alpha);

/// Coefficient i f0'(y) / (2 f0(y)) of the characteristic equation
/// dz_bar W = coeff * conj(W); purely imaginary.
std::function<std::complex<double>(double)>
vekua_coefficient(const GeneratingFunction& g);

} // namespace beltrami
