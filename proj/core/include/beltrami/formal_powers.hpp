#pragma once

#include <memory>
#include <vector>

#include "beltrami/fields.hpp"
#include "beltrami/profile.hpp"

namespace beltrami {

/// The two one-dimensional recursive families behind the formal powers:
///
///   Y^(0) = Yt^(0) = 1,
///   Y^(n)  = n * int_{y0}^{y} Y^(n-1)  * f0^2   (n odd),  / f0^2 (n even),
///   Yt^(n) = n * int_{y0}^{y} Yt^(n-1) / f0^2   (n odd),  * f0^2 (n even),
///
/// tabulated on the generating function's table interval. Derivatives come
/// from the recursion identity (dY^(n)/dy = n Y^(n-1) w_n), not from
/// differentiating the interpolant, so they are exact in terms of the
/// stored lower level.
class RecursionTable {
public:
    RecursionTable(GeneratingFunction g, double y0, int n_max,
                   double tol = 1e-10, std::size_t n_nodes = 2049);

    int n_max() const { return n_max_; }
    double y0() const { return y0_; }
    Interval domain() const { return domain_; }
    const GeneratingFunction& generator() const { return g_; }

    double Y(int n, double y) const;
    double Ytilde(int n, double y) const;
    double Y_deriv(int n, double y) const;
    double Ytilde_deriv(int n, double y) const;
    double Y_deriv2(int n, double y) const;
    double Ytilde_deriv2(int n, double y) const;

private:
    // weight of level n for the Y family (flip for Ytilde)
    double weight(int n, bool tilde, double y) const;
    double weight_deriv(int n, bool tilde, double y) const;
    const AntiderivativeTable& table(int n, bool tilde) const;
    double deriv(int n, bool tilde, double y) const;
    double deriv2(int n, bool tilde, double y) const;

    GeneratingFunction g_;
    double y0_;
    int n_max_;
    Interval domain_;
    std::vector<AntiderivativeTable> Y_, Yt_;
};

/// Evaluator for the formal powers
///
///   *Z^(n)(a, z0; z) = a1 sum_k C(n,k) (x-x0)^{n-k} i^k Y^(k)
///                    + i a2 sum_k C(n,k) (x-x0)^{n-k} i^k Yt^(k)
///
/// and their partial derivatives. Evaluation is pure and safe to call
/// concurrently.
class FormalPowerBasis {
public:
    FormalPowerBasis(std::shared_ptr<const RecursionTable> table, Complex z0);

    int n_max() const { return table_->n_max(); }
    Complex z0() const { return z0_; }
    const RecursionTable& recursion() const { return *table_; }
    std::shared_ptr<const RecursionTable> recursion_ptr() const { return table_; }

    Complex formal_power(Complex a, int n, Complex z) const;
    /// (d/dx, d/dy) of *Z^(n); matches finite differences of formal_power.
    std::pair<Complex, Complex> formal_power_grad(Complex a, int n, Complex z) const;

    struct Hessian {
        Complex dxx, dxy, dyy;
    };
    Hessian formal_power_hessian(Complex a, int n, Complex z) const;

    /// omega = *Z^(n)(a, z0; .) as a complex field with analytic partials.
    ComplexField2D as_field(Complex a, int n, const ProbeGrid& grid) const;

    /// W = f0 * Re omega + i Im omega / f0, a solution of the
    /// characteristic equation W_zbar = (f0'/(2 f0)) i conj(W).
    ComplexField2D first_kind_field(Complex a, int n, const ProbeGrid& grid) const;

private:
    void check(int n, double y) const;

    std::shared_ptr<const RecursionTable> table_;
    Complex z0_;
    std::vector<double> binom_; // C(n,k) packed row-wise for n <= n_max
    const double* row(int n) const;
};

/// Real/imaginary parts of *Z^(n)(a, z0; .) as scalar fields, plus the sup
/// over interior grid points of the first-order system
///   phi_x - psi_y / f0^2,   phi_y + psi_x / f0^2
/// evaluated with analytic partials.
struct SecondKindPair {
    ScalarField2D phi;
    ScalarField2D psi;
    double system_residual = 0.0;
};

SecondKindPair second_kind_pair(const FormalPowerBasis& basis, Complex a, int n,
                                const ProbeGrid& grid);

} // namespace beltrami
