#include "beltrami/beltrami.hpp"

#include <array>
#include <cmath>

namespace beltrami {

BasisCore::BasisCore(AlphaProfile profile, FormalPowerBasis basis)
    : profile_(std::move(profile)), basis_(std::move(basis)) {}

double BasisCore::b3(int n, Flavor f, double x, double y) const {
    const Complex z(x, y);
    return generator().S(y) * basis_.formal_power(a_of(f), n, z).real();
}

Vec2 BasisCore::b3_grad(int n, Flavor f, double x, double y) const {
    const Complex z(x, y);
    const GeneratingFunction& g = generator();
    const double S = g.S(y), dS = g.S_deriv(y);
    const Complex w = basis_.formal_power(a_of(f), n, z);
    const auto [wx, wy] = basis_.formal_power_grad(a_of(f), n, z);
    return Vec2{S * wx.real(), dS * w.real() + S * wy.real()};
}

double BasisCore::b3_dxx(int n, Flavor f, double x, double y) const {
    const auto h = basis_.formal_power_hessian(a_of(f), n, Complex(x, y));
    return generator().S(y) * h.dxx.real();
}

double BasisCore::b3_dxy(int n, Flavor f, double x, double y) const {
    const Complex z(x, y);
    const GeneratingFunction& g = generator();
    const auto [wx, wy] = basis_.formal_power_grad(a_of(f), n, z);
    const auto h = basis_.formal_power_hessian(a_of(f), n, z);
    return g.S_deriv(y) * wx.real() + g.S(y) * h.dxy.real();
}

double BasisCore::b3_dyy(int n, Flavor f, double x, double y) const {
    const Complex z(x, y);
    const GeneratingFunction& g = generator();
    const Complex w = basis_.formal_power(a_of(f), n, z);
    const auto [wx, wy] = basis_.formal_power_grad(a_of(f), n, z);
    const auto h = basis_.formal_power_hessian(a_of(f), n, z);
    return g.S_deriv2(y) * w.real() + 2.0 * g.S_deriv(y) * wy.real() +
           g.S(y) * h.dyy.real();
}

std::pair<int, Flavor> basis_index_map(int j) {
    if (j <= 0) return {0, Flavor::unit};
    const int n = (j + 1) / 2;
    return {n, j % 2 == 1 ? Flavor::unit : Flavor::imag};
}

std::string basis_element_name(int n, Flavor f) {
    return "B3[" + std::to_string(n) + "," + (f == Flavor::unit ? "u" : "v") + "]";
}

std::vector<ScalarBasisElement> b3_basis(const AlphaProfile& profile,
                                         const GeneratingFunction& g, Complex z0,
                                         int n_max, double tol,
                                         std::size_t n_nodes) {
    auto table = std::make_shared<const RecursionTable>(g, z0.imag(), n_max, tol,
                                                        n_nodes);
    auto core = std::make_shared<const BasisCore>(
        profile, FormalPowerBasis(table, z0));

    std::vector<ScalarBasisElement> out;
    out.reserve(static_cast<std::size_t>(2 * n_max + 1));
    for (int j = 0; j < 2 * n_max + 1; ++j) {
        const auto [n, flavor] = basis_index_map(j);
        ScalarBasisElement e;
        e.n = n;
        e.flavor = flavor;
        e.name = basis_element_name(n, flavor);
        e.core = core;
        e.field.value = [core, n, flavor](double x, double y) {
            return core->b3(n, flavor, x, y);
        };
        e.field.grad = [core, n, flavor](double x, double y) {
            return core->b3_grad(n, flavor, x, y);
        };
        out.push_back(std::move(e));
    }
    return out;
}

BeltramiFieldElement field_from_scalar(const ScalarBasisElement& e) {
    if (!e.core) {
        throw DomainError("field_from_scalar: element has no basis core");
    }
    auto core = e.core;
    const int n = e.n;
    const Flavor f = e.flavor;
    const AlphaProfile alpha = core->profile();

    BeltramiFieldElement out;
    out.name = e.name;
    out.B3 = e.field;

    out.B1.value = [core, alpha, n, f](double x, double y) {
        return -core->b3_grad(n, f, x, y).y / alpha.value(y);
    };
    out.B1.grad = [core, alpha, n, f](double x, double y) {
        const double a = alpha.value(y);
        const double da = alpha.deriv(y);
        const double b3y = core->b3_grad(n, f, x, y).y;
        return Vec2{-core->b3_dxy(n, f, x, y) / a,
                    da / (a * a) * b3y - core->b3_dyy(n, f, x, y) / a};
    };

    out.B2.value = [core, alpha, n, f](double x, double y) {
        return core->b3_grad(n, f, x, y).x / alpha.value(y);
    };
    out.B2.grad = [core, alpha, n, f](double x, double y) {
        const double a = alpha.value(y);
        const double da = alpha.deriv(y);
        const double b3x = core->b3_grad(n, f, x, y).x;
        return Vec2{core->b3_dxx(n, f, x, y) / a,
                    -da / (a * a) * b3x + core->b3_dxy(n, f, x, y) / a};
    };
    return out;
}

double BeltramiResiduals::max() const { return std::max({r1, r2, r3}); }

BeltramiResiduals beltrami_residual(const BeltramiFieldElement& field,
                                    const AlphaProfile& profile,
                                    const ProbeGrid& grid, DerivMode mode) {
    const bool analytic = mode == DerivMode::automatic && field.B1.has_grad() &&
                          field.B2.has_grad() && field.B3.has_grad();
    BeltramiResiduals r;
    if (analytic) {
        for (int i = 0; i < grid.nx; ++i) {
            for (int j = 0; j < grid.ny; ++j) {
                const double x = grid.x(i), y = grid.y(j);
                const double a = profile.value(y);
                const Vec2 g3 = field.B3.grad(x, y);
                const Vec2 g1 = field.B1.grad(x, y);
                const Vec2 g2 = field.B2.grad(x, y);
                r.r1 = std::max(r.r1, std::abs(g3.y + a * field.B1.value(x, y)));
                r.r2 = std::max(r.r2, std::abs(-g3.x + a * field.B2.value(x, y)));
                r.r3 = std::max(r.r3,
                                std::abs(g2.x - g1.y + a * field.B3.value(x, y)));
            }
        }
        return r;
    }
    grid.validate(5);
    const auto b1 = sample_grid(grid, field.B1.value);
    const auto b2 = sample_grid(grid, field.B2.value);
    const auto b3 = sample_grid(grid, field.B3.value);
    for (int i = 2; i < grid.nx - 2; ++i) {
        for (int j = 2; j < grid.ny - 2; ++j) {
            const double y = grid.y(j);
            const double a = profile.value(y);
            const std::size_t at = static_cast<std::size_t>(i) * grid.ny + j;
            r.r1 = std::max(r.r1, std::abs(fd_dy(b3, grid, i, j) + a * b1[at]));
            r.r2 = std::max(r.r2, std::abs(-fd_dx(b3, grid, i, j) + a * b2[at]));
            r.r3 = std::max(r.r3, std::abs(fd_dx(b2, grid, i, j) -
                                           fd_dy(b1, grid, i, j) + a * b3[at]));
        }
    }
    return r;
}

double div_alpha_residual(const BeltramiFieldElement& field,
                          const AlphaProfile& profile, const ProbeGrid& grid,
                          DerivMode mode) {
    const bool analytic =
        mode == DerivMode::automatic && field.B1.has_grad() && field.B2.has_grad();
    double sup = 0.0;
    if (analytic) {
        for (int i = 0; i < grid.nx; ++i) {
            for (int j = 0; j < grid.ny; ++j) {
                const double x = grid.x(i), y = grid.y(j);
                const double a = profile.value(y);
                const double da = profile.deriv(y);
                const double div = a * field.B1.grad(x, y).x + da * field.B2.value(x, y) +
                                   a * field.B2.grad(x, y).y;
                sup = std::max(sup, std::abs(div));
            }
        }
        return sup;
    }
    grid.validate(5);
    ProbeGrid g = grid;
    const AlphaProfile& a = profile;
    const auto f1 = sample_grid(g, [&](double x, double y) {
        return a.value(y) * field.B1.value(x, y);
    });
    const auto f2 = sample_grid(g, [&](double x, double y) {
        return a.value(y) * field.B2.value(x, y);
    });
    for (int i = 2; i < g.nx - 2; ++i) {
        for (int j = 2; j < g.ny - 2; ++j) {
            sup = std::max(sup,
                           std::abs(fd_dx(f1, g, i, j) + fd_dy(f2, g, i, j)));
        }
    }
    return sup;
}

double normalized_third_residual_fd(const BeltramiFieldElement& field,
                                    const AlphaProfile& profile,
                                    const ProbeGrid& grid) {
    grid.validate(5);
    const auto b1 = sample_grid(grid, field.B1.value);
    const auto b2 = sample_grid(grid, field.B2.value);
    const auto b3 = sample_grid(grid, field.B3.value);
    double sup = 0.0, scale = 0.0;
    for (int i = 2; i < grid.nx - 2; ++i) {
        for (int j = 2; j < grid.ny - 2; ++j) {
            const double a = profile.value(grid.y(j));
            const std::size_t at = static_cast<std::size_t>(i) * grid.ny + j;
            const double r = fd_dx(b2, grid, i, j) - fd_dy(b1, grid, i, j) +
                             a * b3[at];
            sup = std::max(sup, std::abs(r));
            scale = std::max(scale, std::abs(a * b3[at]));
        }
    }
    return scale > 0.0 ? sup / scale : sup;
}

double series_eval(const SeriesSolution& s, Complex z) {
    if (!s.core) throw DomainError("series_eval: empty basis core");
    if (static_cast<int>(s.coefficients.size()) - 1 > s.core->basis().n_max()) {
        throw NOrderExceeded("series truncation above built n_max");
    }
    double v = 0.0;
    for (std::size_t n = 0; n < s.coefficients.size(); ++n) {
        const auto [an, bn] = s.coefficients[n];
        const int ni = static_cast<int>(n);
        if (an != 0.0) v += an * s.core->b3(ni, Flavor::unit, z.real(), z.imag());
        if (bn != 0.0 && n > 0)
            v += bn * s.core->b3(ni, Flavor::imag, z.real(), z.imag());
    }
    return v;
}

std::array<double, 3> series_field(const SeriesSolution& s, Complex z) {
    if (!s.core) throw DomainError("series_field: empty basis core");
    if (static_cast<int>(s.coefficients.size()) - 1 > s.core->basis().n_max()) {
        throw NOrderExceeded("series truncation above built n_max");
    }
    const double a = s.core->profile().value(z.imag());
    double b3 = 0.0, dx = 0.0, dy = 0.0;
    for (std::size_t n = 0; n < s.coefficients.size(); ++n) {
        const auto [an, bn] = s.coefficients[n];
        const int ni = static_cast<int>(n);
        if (an != 0.0) {
            b3 += an * s.core->b3(ni, Flavor::unit, z.real(), z.imag());
            const Vec2 g = s.core->b3_grad(ni, Flavor::unit, z.real(), z.imag());
            dx += an * g.x;
            dy += an * g.y;
        }
        if (bn != 0.0 && n > 0) {
            b3 += bn * s.core->b3(ni, Flavor::imag, z.real(), z.imag());
            const Vec2 g = s.core->b3_grad(ni, Flavor::imag, z.real(), z.imag());
            dx += bn * g.x;
            dy += bn * g.y;
        }
    }
    return {-dy / a, dx / a, b3};
}

BeltramiFieldElement series_as_field(const SeriesSolution& s) {
    if (!s.core) throw DomainError("series_as_field: empty basis core");
    auto core = s.core;
    auto coeffs = s.coefficients;
    const AlphaProfile alpha = core->profile();

    struct Term {
        double c;
        int n;
        Flavor f;
    };
    std::vector<Term> terms;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (coeffs[n].first != 0.0)
            terms.push_back({coeffs[n].first, static_cast<int>(n), Flavor::unit});
        if (coeffs[n].second != 0.0 && n > 0)
            terms.push_back({coeffs[n].second, static_cast<int>(n), Flavor::imag});
    }

    BeltramiFieldElement out;
    out.name = "series";
    out.B3.value = [core, terms](double x, double y) {
        double v = 0.0;
        for (const Term& t : terms) v += t.c * core->b3(t.n, t.f, x, y);
        return v;
    };
    out.B3.grad = [core, terms](double x, double y) {
        Vec2 g{0.0, 0.0};
        for (const Term& t : terms) {
            const Vec2 gi = core->b3_grad(t.n, t.f, x, y);
            g.x += t.c * gi.x;
            g.y += t.c * gi.y;
        }
        return g;
    };
    out.B1.value = [core, terms, alpha](double x, double y) {
        double v = 0.0;
        for (const Term& t : terms) v += t.c * core->b3_grad(t.n, t.f, x, y).y;
        return -v / alpha.value(y);
    };
    out.B1.grad = [core, terms, alpha](double x, double y) {
        const double a = alpha.value(y);
        const double da = alpha.deriv(y);
        double b3y = 0.0, dxy = 0.0, dyy = 0.0;
        for (const Term& t : terms) {
            b3y += t.c * core->b3_grad(t.n, t.f, x, y).y;
            dxy += t.c * core->b3_dxy(t.n, t.f, x, y);
            dyy += t.c * core->b3_dyy(t.n, t.f, x, y);
        }
        return Vec2{-dxy / a, da / (a * a) * b3y - dyy / a};
    };
    out.B2.value = [core, terms, alpha](double x, double y) {
        double v = 0.0;
        for (const Term& t : terms) v += t.c * core->b3_grad(t.n, t.f, x, y).x;
        return v / alpha.value(y);
    };
    out.B2.grad = [core, terms, alpha](double x, double y) {
        const double a = alpha.value(y);
        const double da = alpha.deriv(y);
        double b3x = 0.0, dxx = 0.0, dxy = 0.0;
        for (const Term& t : terms) {
            b3x += t.c * core->b3_grad(t.n, t.f, x, y).x;
            dxx += t.c * core->b3_dxx(t.n, t.f, x, y);
            dxy += t.c * core->b3_dxy(t.n, t.f, x, y);
        }
        return Vec2{dxx / a, -da / (a * a) * b3x + dxy / a};
    };
    return out;
}

} // namespace beltrami
