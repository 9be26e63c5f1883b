#pragma once

#include "beltrami/fields.hpp"
#include "beltrami/profile.hpp"

namespace beltrami {

/// Conductivity pair (p, q) of the second-order equation
/// (div p grad + q) u = 0; p > 0 on its domain.
struct ConductivityPair {
    ScalarField2D p;
    ScalarField2D q;
};

/// p = 1/alpha(y), q = alpha(y), the pair the planar Beltrami equation
/// reduces to.
ConductivityPair beltrami_pair(const AlphaProfile& alpha);

/// Context for the solution transfers: a positive particular solution u0
/// of (div p grad + q) u = 0, the rectangle the fields live on, the base
/// point of the antiderivative operator and its free constant.
struct TransferContext {
    ConductivityPair pair;
    ScalarField2D u0;
    ProbeGrid grid;
    Vec2 base{0.0, 0.0};
    double c = 0.0;
};

/// sup over interior grid points of |dy(Re Phi) - dx(Im Phi)|, the
/// compatibility condition for Phi to be dz_bar of a real function
/// (4th-order central differences, or analytic partials when present).
double casirot_residual(const ComplexField2D& phi);

/// Antiderivative operator
///   Abar[Phi](x, y) = 2 ( int_{x0}^{x} Phi1(t, y) dt
///                       + int_{y0}^{y} Phi2(x0, s) ds ) + c
/// on the rectangle of phi.grid. Requires casirot_residual(phi) below
/// `compat_tol` (throws CompatibilityError carrying the residual). The
/// returned field has the exact analytic gradient (2 Phi1, 2 Phi2).
ScalarField2D abar(const ComplexField2D& phi, Vec2 base, double c = 0.0,
                   double quad_tol = 1e-12, double compat_tol = 1e-6);

/// Potential of the associated equation (div (1/p) grad + q1) v = 0:
///   q1 = -(1/p) ( q/p + 2 <grad p / p, grad u0 / u0> + 2 (grad u0 / u0)^2 ).
ScalarField2D compute_q1(const TransferContext& ctx);

/// v = u0^{-1} Abar( i p u0^2 dz_bar(u0^{-1} u) ); checks that u solves
/// (div p grad + q) u = 0 on the grid to `residual_tol` first.
ScalarField2D transfer_u_to_v(const TransferContext& ctx, const ScalarField2D& u,
                              double residual_tol = 1e-5);

/// u = -u0 Abar( i p^{-1} u0^{-2} dz_bar(u0 v) ), the inverse transfer up
/// to a multiple of u0.
ScalarField2D transfer_v_to_u(const TransferContext& ctx, const ScalarField2D& v,
                              double residual_tol = 1e-5);

/// sup over interior grid points of |dz_bar W - (dz_bar f / f) conj(W)|.
double vekua_residual(const ComplexField2D& W, const ScalarField2D& f);

/// Convenience overload for f = f0(y) of a generating function.
double vekua_residual(const ComplexField2D& W, const GeneratingFunction& g);

/// sup over interior grid points of the characteristic equation of
/// second-kind functions,
///   | dz_bar omega - (1 - f0^2)/(1 + f0^2) * dz_bar(conj omega) |.
double second_kind_residual(const ComplexField2D& omega,
                            const GeneratingFunction& g);

} // namespace beltrami
