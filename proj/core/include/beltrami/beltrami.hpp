#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "beltrami/fields.hpp"
#include "beltrami/formal_powers.hpp"
#include "beltrami/profile.hpp"

namespace beltrami {

enum class Flavor { unit, imag }; // a = 1 or a = i

/// One member of the complete scalar system for
/// (div (1/alpha) grad + alpha) B3 = 0:
///   B3 = sqrt(alpha) f0 Re *Z^(n)(a, z0; .) = S(y) Re *Z^(n)(a, z0; .)
/// with an analytic gradient.
struct ScalarBasisElement {
    int n = 0;
    Flavor flavor = Flavor::unit;
    std::string name;   // "B3[n,u]" / "B3[n,v]"
    ScalarField2D field;

    std::shared_ptr<const class BasisCore> core;
};

/// (B1, B2, B3) with B1 = -(1/alpha) dy B3 and B2 = (1/alpha) dx B3 built
/// from the analytic derivatives of a scalar element; all three components
/// carry analytic gradients.
struct BeltramiFieldElement {
    std::string name;
    ScalarField2D B1, B2, B3;
};

/// Shared evaluation machinery behind basis elements, field elements and
/// series solutions.
class BasisCore {
public:
    BasisCore(AlphaProfile profile, FormalPowerBasis basis);

    const AlphaProfile& profile() const { return profile_; }
    const FormalPowerBasis& basis() const { return basis_; }
    const GeneratingFunction& generator() const {
        return basis_.recursion().generator();
    }

    Complex a_of(Flavor f) const {
        return f == Flavor::unit ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
    }

    double b3(int n, Flavor f, double x, double y) const;
    Vec2 b3_grad(int n, Flavor f, double x, double y) const;
    // second partials of B3, used for the analytic gradients of (B1, B2)
    double b3_dxx(int n, Flavor f, double x, double y) const;
    double b3_dxy(int n, Flavor f, double x, double y) const;
    double b3_dyy(int n, Flavor f, double x, double y) const;

private:
    AlphaProfile profile_;
    FormalPowerBasis basis_;
};

/// The emitted system for orders 0..n_max: 2 n_max + 1 elements ordered
/// B3[0,u], B3[1,u], B3[1,v], B3[2,u], B3[2,v], ...
/// The n = 0 imaginary-flavor element is identically zero
/// (Re *Z^(0)(i, .) = 0) and is omitted; index_map documents the layout.
std::vector<ScalarBasisElement> b3_basis(const AlphaProfile& profile,
                                         const GeneratingFunction& g, Complex z0,
                                         int n_max, double tol = 1e-10,
                                         std::size_t n_nodes = 2049);

/// (order, flavor) of basis element j under the ordering above.
std::pair<int, Flavor> basis_index_map(int j);
std::string basis_element_name(int n, Flavor f);

BeltramiFieldElement field_from_scalar(const ScalarBasisElement& e);

struct BeltramiResiduals {
    double r1 = 0.0; // dy B3 + alpha B1
    double r2 = 0.0; // -dx B3 + alpha B2
    double r3 = 0.0; // dx B2 - dy B1 + alpha B3
    double max() const;
};

enum class DerivMode {
    automatic,        // analytic derivatives when fields carry them
    finite_difference // 4th-order stencils on the probe grid
};

/// Sup-norms of the three scalar components of rot B + alpha B = 0 for a
/// z-independent field.
BeltramiResiduals beltrami_residual(const BeltramiFieldElement& field,
                                    const AlphaProfile& profile,
                                    const ProbeGrid& grid,
                                    DerivMode mode = DerivMode::automatic);

/// sup |dx(alpha B1) + dy(alpha B2)|; vanishes identically for any solution
/// since div rot = 0.
double div_alpha_residual(const BeltramiFieldElement& field,
                          const AlphaProfile& profile, const ProbeGrid& grid,
                          DerivMode mode = DerivMode::automatic);

/// FD residual of the third scalar equation normalized by sup |alpha B3|;
/// the scale-free accuracy figure used for high orders.
double normalized_third_residual_fd(const BeltramiFieldElement& field,
                                    const AlphaProfile& profile,
                                    const ProbeGrid& grid);

/// Finite linear combination sum_n ( a_n B3[n,u] + b_n B3[n,v] ).
struct SeriesSolution {
    std::vector<std::pair<double, double>> coefficients; // (a_n, b_n)
    std::shared_ptr<const BasisCore> core;
};

double series_eval(const SeriesSolution& s, Complex z);                 // B3
std::array<double, 3> series_field(const SeriesSolution& s, Complex z); // B1,B2,B3
BeltramiFieldElement series_as_field(const SeriesSolution& s);

} // namespace beltrami
