#include "beltrami/vekua.hpp"

#include <cmath>

#include "beltrami/quadrature.hpp"

namespace beltrami {

ConductivityPair beltrami_pair(const AlphaProfile& alpha) {
    AlphaProfile a = alpha;
    ConductivityPair pair;
    pair.p.value = [a](double, double y) { return 1.0 / a.value(y); };
    pair.p.grad = [a](double, double y) {
        const double v = a.value(y);
        return Vec2{0.0, -a.deriv(y) / (v * v)};
    };
    pair.q.value = [a](double, double y) { return a.value(y); };
    pair.q.grad = [a](double, double y) { return Vec2{0.0, a.deriv(y)}; };
    return pair;
}

double casirot_residual(const ComplexField2D& phi) {
    phi.grid.validate(5);
    if (phi.has_partials()) {
        double sup = 0.0;
        for (int i = 0; i < phi.grid.nx; ++i) {
            for (int j = 0; j < phi.grid.ny; ++j) {
                const auto [px, py] = phi.partials(phi.grid.x(i), phi.grid.y(j));
                sup = std::max(sup, std::abs(py.real() - px.imag()));
            }
        }
        return sup;
    }
    const std::vector<Complex> s = sample_grid(phi.grid, phi.value);
    for (const Complex& v : s) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw NonFiniteSample("casirot_residual: field sample");
        }
    }
    double sup = 0.0;
    for (int i = 2; i < phi.grid.nx - 2; ++i) {
        for (int j = 2; j < phi.grid.ny - 2; ++j) {
            const double r =
                fd_dy(s, phi.grid, i, j).real() - fd_dx(s, phi.grid, i, j).imag();
            sup = std::max(sup, std::abs(r));
        }
    }
    return sup;
}

ScalarField2D abar(const ComplexField2D& phi, Vec2 base, double c,
                   double quad_tol, double compat_tol) {
    const double res = casirot_residual(phi);
    if (!(res <= compat_tol)) {
        throw CompatibilityError(
            "abar: compatibility residual " + std::to_string(res) +
                " exceeds tolerance " + std::to_string(compat_tol),
            res);
    }
    auto value_fn = phi.value;
    ScalarField2D out;
    out.value = [value_fn, base, c, quad_tol](double x, double y) {
        double along_x = 0.0;
        if (x != base.x) {
            along_x = integrate(
                [&](double t) { return value_fn(t, y).real(); },
                Interval(std::min(base.x, x), std::max(base.x, x)), quad_tol);
            if (x < base.x) along_x = -along_x;
        }
        double along_y = 0.0;
        if (y != base.y) {
            along_y = integrate(
                [&](double s) { return value_fn(base.x, s).imag(); },
                Interval(std::min(base.y, y), std::max(base.y, y)), quad_tol);
            if (y < base.y) along_y = -along_y;
        }
        return 2.0 * (along_x + along_y) + c;
    };
    // dz_bar(out) = Phi exactly, so grad(out) = (2 Phi1, 2 Phi2)
    out.grad = [value_fn](double x, double y) {
        const Complex v = value_fn(x, y);
        return Vec2{2.0 * v.real(), 2.0 * v.imag()};
    };
    return out;
}

ScalarField2D compute_q1(const TransferContext& ctx) {
    ScalarField2D p = ctx.pair.p, q = ctx.pair.q, u0 = ctx.u0;
    ScalarField2D out;
    out.value = [p, q, u0](double x, double y) {
        const double pv = p.value(x, y);
        const double u0v = u0.value(x, y);
        const Vec2 gp = grad_or_fd(p, x, y);
        const Vec2 gu = grad_or_fd(u0, x, y);
        const double dot =
            (gp.x * gu.x + gp.y * gu.y) / (pv * u0v);
        const double gu2 = (gu.x * gu.x + gu.y * gu.y) / (u0v * u0v);
        return -(q.value(x, y) / pv + 2.0 * dot + 2.0 * gu2) / pv;
    };
    return out;
}

namespace {

// i * s * dz_bar(g) for a real field g: Phi1 = -(s/2) dy g, Phi2 = (s/2) dx g
ComplexField2D weighted_dzbar(const ScalarField2D& g,
                              const std::function<double(double, double)>& scale,
                              const ProbeGrid& grid) {
    ScalarField2D gf = g;
    ComplexField2D out;
    out.grid = grid;
    out.value = [gf, scale](double x, double y) {
        const Vec2 dg = grad_or_fd(gf, x, y);
        const double s = scale(x, y);
        return Complex(-0.5 * s * dg.y, 0.5 * s * dg.x);
    };
    return out;
}

void check_is_solution(const TransferContext& ctx, const ScalarField2D& u,
                       const ScalarField2D& p, const ScalarField2D& q,
                       double residual_tol, const char* who) {
    const double r = elliptic_residual(u, p, q, ctx.grid);
    if (!(r <= residual_tol)) {
        throw ResidualError(std::string(who) + ": input field has equation residual " +
                            std::to_string(r) + " above tolerance " +
                            std::to_string(residual_tol));
    }
}

} // namespace

ScalarField2D transfer_u_to_v(const TransferContext& ctx, const ScalarField2D& u,
                              double residual_tol) {
    ctx.grid.validate(5);
    check_is_solution(ctx, u, ctx.pair.p, ctx.pair.q, residual_tol,
                      "transfer_u_to_v");

    ScalarField2D u0 = ctx.u0, uf = u, pf = ctx.pair.p;
    // g = u / u0 with product-rule gradient
    ScalarField2D g;
    g.value = [u0, uf](double x, double y) {
        return uf.value(x, y) / u0.value(x, y);
    };
    if (u.has_grad() && u0.has_grad()) {
        g.grad = [u0, uf](double x, double y) {
            const double a = u0.value(x, y);
            const double gv = uf.value(x, y) / a;
            const Vec2 du = uf.grad(x, y);
            const Vec2 du0 = u0.grad(x, y);
            return Vec2{(du.x - gv * du0.x) / a, (du.y - gv * du0.y) / a};
        };
    }
    auto scale = [u0, pf](double x, double y) {
        const double a = u0.value(x, y);
        return pf.value(x, y) * a * a;
    };
    const ComplexField2D phi = weighted_dzbar(g, scale, ctx.grid);
    const ScalarField2D anti = abar(phi, ctx.base, ctx.c);

    ScalarField2D v;
    v.value = [u0, anti](double x, double y) {
        return anti.value(x, y) / u0.value(x, y);
    };
    v.grad = [u0, anti](double x, double y) {
        const double a = u0.value(x, y);
        const double vv = anti.value(x, y) / a;
        const Vec2 da = anti.grad(x, y);
        const Vec2 du0 = grad_or_fd(u0, x, y);
        return Vec2{(da.x - vv * du0.x) / a, (da.y - vv * du0.y) / a};
    };
    return v;
}

ScalarField2D transfer_v_to_u(const TransferContext& ctx, const ScalarField2D& v,
                              double residual_tol) {
    ctx.grid.validate(5);
    ScalarField2D pinv;
    ScalarField2D p = ctx.pair.p;
    pinv.value = [p](double x, double y) { return 1.0 / p.value(x, y); };
    pinv.grad = [p](double x, double y) {
        const double pv = p.value(x, y);
        const Vec2 gp = grad_or_fd(p, x, y);
        return Vec2{-gp.x / (pv * pv), -gp.y / (pv * pv)};
    };
    const ScalarField2D q1 = compute_q1(ctx);
    check_is_solution(ctx, v, pinv, q1, residual_tol, "transfer_v_to_u");

    ScalarField2D u0 = ctx.u0, vf = v;
    // w = u0 * v
    ScalarField2D w;
    w.value = [u0, vf](double x, double y) {
        return u0.value(x, y) * vf.value(x, y);
    };
    if (v.has_grad() && u0.has_grad()) {
        w.grad = [u0, vf](double x, double y) {
            const double a = u0.value(x, y);
            const double b = vf.value(x, y);
            const Vec2 du0 = u0.grad(x, y);
            const Vec2 dv = vf.grad(x, y);
            return Vec2{a * dv.x + b * du0.x, a * dv.y + b * du0.y};
        };
    }
    auto scale = [u0, p](double x, double y) {
        const double a = u0.value(x, y);
        return 1.0 / (p.value(x, y) * a * a);
    };
    const ComplexField2D phi = weighted_dzbar(w, scale, ctx.grid);
    const ScalarField2D anti = abar(phi, ctx.base, ctx.c);

    ScalarField2D u;
    u.value = [u0, anti](double x, double y) {
        return -u0.value(x, y) * anti.value(x, y);
    };
    u.grad = [u0, anti](double x, double y) {
        const double a = u0.value(x, y);
        const double b = anti.value(x, y);
        const Vec2 da = anti.grad(x, y);
        const Vec2 du0 = grad_or_fd(u0, x, y);
        return Vec2{-(a * da.x + b * du0.x), -(a * da.y + b * du0.y)};
    };
    return u;
}

namespace {

double vekua_residual_impl(const ComplexField2D& W,
                           const std::function<Complex(double, double)>& mu) {
    // residual of dz_bar W = mu * conj(W)
    W.grid.validate(5);
    if (W.has_partials()) {
        double sup = 0.0;
        for (int i = 0; i < W.grid.nx; ++i) {
            for (int j = 0; j < W.grid.ny; ++j) {
                const double x = W.grid.x(i), y = W.grid.y(j);
                const auto [wx, wy] = W.partials(x, y);
                const Complex dzbar = 0.5 * (wx + Complex(0.0, 1.0) * wy);
                const Complex rhs = mu(x, y) * std::conj(W.value(x, y));
                sup = std::max(sup, std::abs(dzbar - rhs));
            }
        }
        return sup;
    }
    const std::vector<Complex> s = sample_grid(W.grid, W.value);
    double sup = 0.0;
    for (int i = 2; i < W.grid.nx - 2; ++i) {
        for (int j = 2; j < W.grid.ny - 2; ++j) {
            const double x = W.grid.x(i), y = W.grid.y(j);
            const Complex wx = fd_dx(s, W.grid, i, j);
            const Complex wy = fd_dy(s, W.grid, i, j);
            const Complex dzbar = 0.5 * (wx + Complex(0.0, 1.0) * wy);
            const Complex rhs =
                mu(x, y) * std::conj(s[static_cast<std::size_t>(i) * W.grid.ny + j]);
            sup = std::max(sup, std::abs(dzbar - rhs));
        }
    }
    return sup;
}

} // namespace

double vekua_residual(const ComplexField2D& W, const ScalarField2D& f) {
    ScalarField2D ff = f;
    return vekua_residual_impl(W, [ff](double x, double y) {
        const Vec2 df = grad_or_fd(ff, x, y);
        const Complex fzbar(0.5 * df.x, 0.5 * df.y);
        return fzbar / ff.value(x, y);
    });
}

double vekua_residual(const ComplexField2D& W, const GeneratingFunction& g) {
    GeneratingFunction gf = g;
    return vekua_residual_impl(W, [gf](double, double y) {
        return Complex(0.0, 0.5 * gf.f0_deriv(y) / gf.f0(y));
    });
}

double second_kind_residual(const ComplexField2D& omega,
                            const GeneratingFunction& g) {
    omega.grid.validate(5);
    GeneratingFunction gf = g;
    auto mu = [gf](double y) {
        const double f2 = gf.f0_sq(y);
        return (1.0 - f2) / (1.0 + f2);
    };

    if (omega.has_partials()) {
        double sup = 0.0;
        for (int i = 0; i < omega.grid.nx; ++i) {
            for (int j = 0; j < omega.grid.ny; ++j) {
                const double x = omega.grid.x(i), y = omega.grid.y(j);
                const auto [ox, oy] = omega.partials(x, y);
                const Complex dzbar = 0.5 * (ox + Complex(0.0, 1.0) * oy);
                // dz_bar(conj omega) = conj(dz omega)
                const Complex dz = 0.5 * (ox - Complex(0.0, 1.0) * oy);
                sup = std::max(sup, std::abs(dzbar - mu(y) * std::conj(dz)));
            }
        }
        return sup;
    }
    const std::vector<Complex> s = sample_grid(omega.grid, omega.value);
    double sup = 0.0;
    for (int i = 2; i < omega.grid.nx - 2; ++i) {
        for (int j = 2; j < omega.grid.ny - 2; ++j) {
            const double y = omega.grid.y(j);
            const Complex ox = fd_dx(s, omega.grid, i, j);
            const Complex oy = fd_dy(s, omega.grid, i, j);
            const Complex dzbar = 0.5 * (ox + Complex(0.0, 1.0) * oy);
            const Complex dz = 0.5 * (ox - Complex(0.0, 1.0) * oy);
            sup = std::max(sup, std::abs(dzbar - mu(y) * std::conj(dz)));
        }
    }
    return sup;
}

} // namespace beltrami
