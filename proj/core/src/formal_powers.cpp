#include "beltrami/formal_powers.hpp"

#include <cmath>

namespace beltrami {

RecursionTable::RecursionTable(GeneratingFunction g, double y0, int n_max,
                               double tol, std::size_t n_nodes)
    : g_(std::move(g)), y0_(y0), n_max_(n_max), domain_(g_.table_interval()) {
    if (n_max_ < 0) {
        throw NOrderExceeded("RecursionTable: n_max must be >= 0");
    }
    if (!domain_.contains(y0_)) {
        throw OutOfDomain("RecursionTable: y0 outside the generating function window");
    }

    // level 0: constant 1
    std::vector<double> ones(n_nodes, 1.0), zeros(n_nodes, 0.0);
    Y_.emplace_back(domain_.lo, domain_.hi, ones, zeros, y0_);
    Yt_.emplace_back(domain_.lo, domain_.hi, std::move(ones), std::move(zeros), y0_);

    for (int n = 1; n <= n_max_; ++n) {
        for (bool tilde : {false, true}) {
            auto& family = tilde ? Yt_ : Y_;
            const AntiderivativeTable& prev = family.back();
            const double order = static_cast<double>(n);
            auto integrand = [this, &prev, n, tilde, order](double y) {
                return order * prev.value(y) * weight(n, tilde, y);
            };
            family.push_back(cumulative(integrand, y0_, domain_, tol, n_nodes));
        }
    }
}

double RecursionTable::weight(int n, bool tilde, double y) const {
    const bool direct = (n % 2 == 1) != tilde; // Y: odd levels use f0^2
    const double f2 = g_.f0_sq(y);
    return direct ? f2 : 1.0 / f2;
}

double RecursionTable::weight_deriv(int n, bool tilde, double y) const {
    const bool direct = (n % 2 == 1) != tilde;
    const double f = g_.f0(y);
    const double df = g_.f0_deriv(y);
    return direct ? 2.0 * f * df : -2.0 * df / (f * f * f);
}

const AntiderivativeTable& RecursionTable::table(int n, bool tilde) const {
    if (n < 0 || n > n_max_) {
        throw NOrderExceeded("recursion level " + std::to_string(n) +
                             " above built n_max=" + std::to_string(n_max_));
    }
    return tilde ? Yt_[static_cast<std::size_t>(n)] : Y_[static_cast<std::size_t>(n)];
}

double RecursionTable::Y(int n, double y) const { return table(n, false).value(y); }
double RecursionTable::Ytilde(int n, double y) const { return table(n, true).value(y); }

double RecursionTable::deriv(int n, bool tilde, double y) const {
    if (n == 0) {
        table(0, tilde); // validates n range
        return 0.0;
    }
    return static_cast<double>(n) * table(n - 1, tilde).value(y) *
           weight(n, tilde, y);
}

double RecursionTable::deriv2(int n, bool tilde, double y) const {
    if (n == 0) {
        table(0, tilde);
        return 0.0;
    }
    const double prev = table(n - 1, tilde).value(y);
    const double dprev = deriv(n - 1, tilde, y);
    return static_cast<double>(n) *
           (dprev * weight(n, tilde, y) + prev * weight_deriv(n, tilde, y));
}

double RecursionTable::Y_deriv(int n, double y) const { return deriv(n, false, y); }
double RecursionTable::Ytilde_deriv(int n, double y) const { return deriv(n, true, y); }
double RecursionTable::Y_deriv2(int n, double y) const { return deriv2(n, false, y); }
double RecursionTable::Ytilde_deriv2(int n, double y) const { return deriv2(n, true, y); }

FormalPowerBasis::FormalPowerBasis(std::shared_ptr<const RecursionTable> table,
                                   Complex z0)
    : table_(std::move(table)), z0_(z0) {
    if (!table_) {
        throw DomainError("FormalPowerBasis: null recursion table");
    }
    if (!table_->domain().contains(z0_.imag())) {
        throw OutOfDomain("FormalPowerBasis: Im z0 outside the recursion window");
    }
    const int m = table_->n_max();
    binom_.resize(static_cast<std::size_t>(m + 1) * (m + 2) / 2);
    for (int n = 0; n <= m; ++n) {
        double* r = binom_.data() + static_cast<std::size_t>(n) * (n + 1) / 2;
        r[0] = 1.0;
        for (int k = 1; k <= n; ++k) {
            r[k] = r[k - 1] * static_cast<double>(n - k + 1) / static_cast<double>(k);
        }
    }
}

const double* FormalPowerBasis::row(int n) const {
    return binom_.data() + static_cast<std::size_t>(n) * (n + 1) / 2;
}

void FormalPowerBasis::check(int n, double y) const {
    if (n < 0 || n > table_->n_max()) {
        throw NOrderExceeded("formal power order " + std::to_string(n) +
                             " above built n_max=" + std::to_string(table_->n_max()));
    }
    if (!table_->domain().contains(y)) {
        throw OutOfDomain("formal power evaluated at y=" + std::to_string(y) +
                          " outside the recursion window");
    }
}

namespace {

// sign of Re(i^k) for even k and Im(i^k) for odd k
inline double alt_sign(int k) { return (k / 2) % 2 == 0 ? 1.0 : -1.0; }

} // namespace

Complex FormalPowerBasis::formal_power(Complex a, int n, Complex z) const {
    const double y = z.imag();
    check(n, y);
    const double dx = z.real() - z0_.real();
    const double* c = row(n);

    // accumulate from k = n down so the (x - x0) power grows by one factor
    // per step; i^k splits the sums into real (k even) and imaginary parts
    double p_even = 0.0, p_odd = 0.0, q_even = 0.0, q_odd = 0.0;
    double xp = 1.0;
    for (int k = n; k >= 0; --k) {
        const double t = c[k] * xp;
        if (k % 2 == 0) {
            const double s = alt_sign(k);
            p_even += s * t * table_->Y(k, y);
            q_even += s * t * table_->Ytilde(k, y);
        } else {
            const double s = alt_sign(k);
            p_odd += s * t * table_->Y(k, y);
            q_odd += s * t * table_->Ytilde(k, y);
        }
        xp *= dx;
    }
    const double a1 = a.real(), a2 = a.imag();
    return {a1 * p_even - a2 * q_odd, a1 * p_odd + a2 * q_even};
}

std::pair<Complex, Complex>
FormalPowerBasis::formal_power_grad(Complex a, int n, Complex z) const {
    const double y = z.imag();
    check(n, y);
    const double dx = z.real() - z0_.real();
    const double* c = row(n);

    double px_e = 0.0, px_o = 0.0, qx_e = 0.0, qx_o = 0.0;
    double py_e = 0.0, py_o = 0.0, qy_e = 0.0, qy_o = 0.0;
    double xp = 1.0;  // dx^{n-k-1} tracked for the x-derivative
    for (int k = n - 1; k >= 0; --k) {
        const double t = c[k] * static_cast<double>(n - k) * xp;
        const double s = alt_sign(k);
        if (k % 2 == 0) {
            px_e += s * t * table_->Y(k, y);
            qx_e += s * t * table_->Ytilde(k, y);
        } else {
            px_o += s * t * table_->Y(k, y);
            qx_o += s * t * table_->Ytilde(k, y);
        }
        xp *= dx;
    }
    xp = 1.0;
    for (int k = n; k >= 0; --k) {
        const double t = c[k] * xp;
        const double s = alt_sign(k);
        if (k % 2 == 0) {
            py_e += s * t * table_->Y_deriv(k, y);
            qy_e += s * t * table_->Ytilde_deriv(k, y);
        } else {
            py_o += s * t * table_->Y_deriv(k, y);
            qy_o += s * t * table_->Ytilde_deriv(k, y);
        }
        xp *= dx;
    }
    const double a1 = a.real(), a2 = a.imag();
    Complex ddx{a1 * px_e - a2 * qx_o, a1 * px_o + a2 * qx_e};
    Complex ddy{a1 * py_e - a2 * qy_o, a1 * py_o + a2 * qy_e};
    return {ddx, ddy};
}

FormalPowerBasis::Hessian
FormalPowerBasis::formal_power_hessian(Complex a, int n, Complex z) const {
    const double y = z.imag();
    check(n, y);
    const double dx = z.real() - z0_.real();
    const double* c = row(n);

    double xx_e = 0.0, xx_o = 0.0, txx_e = 0.0, txx_o = 0.0;
    double xy_e = 0.0, xy_o = 0.0, txy_e = 0.0, txy_o = 0.0;
    double yy_e = 0.0, yy_o = 0.0, tyy_e = 0.0, tyy_o = 0.0;

    double xp = 1.0;
    for (int k = n - 2; k >= 0; --k) {
        const double fac = static_cast<double>(n - k) * static_cast<double>(n - k - 1);
        const double t = c[k] * fac * xp;
        const double s = alt_sign(k);
        if (k % 2 == 0) {
            xx_e += s * t * table_->Y(k, y);
            txx_e += s * t * table_->Ytilde(k, y);
        } else {
            xx_o += s * t * table_->Y(k, y);
            txx_o += s * t * table_->Ytilde(k, y);
        }
        xp *= dx;
    }
    xp = 1.0;
    for (int k = n - 1; k >= 0; --k) {
        const double t = c[k] * static_cast<double>(n - k) * xp;
        const double s = alt_sign(k);
        if (k % 2 == 0) {
            xy_e += s * t * table_->Y_deriv(k, y);
            txy_e += s * t * table_->Ytilde_deriv(k, y);
        } else {
            xy_o += s * t * table_->Y_deriv(k, y);
            txy_o += s * t * table_->Ytilde_deriv(k, y);
        }
        xp *= dx;
    }
    xp = 1.0;
    for (int k = n; k >= 0; --k) {
        const double t = c[k] * xp;
        const double s = alt_sign(k);
        if (k % 2 == 0) {
            yy_e += s * t * table_->Y_deriv2(k, y);
            tyy_e += s * t * table_->Ytilde_deriv2(k, y);
        } else {
            yy_o += s * t * table_->Y_deriv2(k, y);
            tyy_o += s * t * table_->Ytilde_deriv2(k, y);
        }
        xp *= dx;
    }
    const double a1 = a.real(), a2 = a.imag();
    Hessian h;
    h.dxx = {a1 * xx_e - a2 * txx_o, a1 * xx_o + a2 * txx_e};
    h.dxy = {a1 * xy_e - a2 * txy_o, a1 * xy_o + a2 * txy_e};
    h.dyy = {a1 * yy_e - a2 * tyy_o, a1 * yy_o + a2 * tyy_e};
    return h;
}

ComplexField2D FormalPowerBasis::as_field(Complex a, int n,
                                          const ProbeGrid& grid) const {
    FormalPowerBasis self = *this;
    ComplexField2D f;
    f.grid = grid;
    f.value = [self, a, n](double x, double y) {
        return self.formal_power(a, n, Complex(x, y));
    };
    f.partials = [self, a, n](double x, double y) {
        return self.formal_power_grad(a, n, Complex(x, y));
    };
    return f;
}

ComplexField2D FormalPowerBasis::first_kind_field(Complex a, int n,
                                                  const ProbeGrid& grid) const {
    FormalPowerBasis self = *this;
    const GeneratingFunction g = table_->generator();
    ComplexField2D f;
    f.grid = grid;
    f.value = [self, g, a, n](double x, double y) {
        const Complex w = self.formal_power(a, n, Complex(x, y));
        const double f0 = g.f0(y);
        return Complex(f0 * w.real(), w.imag() / f0);
    };
    f.partials = [self, g, a, n](double x, double y) {
        const Complex w = self.formal_power(a, n, Complex(x, y));
        const auto [wx, wy] = self.formal_power_grad(a, n, Complex(x, y));
        const double f0 = g.f0(y);
        const double df0 = g.f0_deriv(y);
        Complex ddx(f0 * wx.real(), wx.imag() / f0);
        Complex ddy(df0 * w.real() + f0 * wy.real(),
                    (wy.imag() * f0 - w.imag() * df0) / (f0 * f0));
        return std::make_pair(ddx, ddy);
    };
    return f;
}

SecondKindPair second_kind_pair(const FormalPowerBasis& basis, Complex a, int n,
                                const ProbeGrid& grid) {
    grid.validate(2);
    FormalPowerBasis self = basis;
    SecondKindPair out;
    out.phi.value = [self, a, n](double x, double y) {
        return self.formal_power(a, n, Complex(x, y)).real();
    };
    out.phi.grad = [self, a, n](double x, double y) {
        const auto [zx, zy] = self.formal_power_grad(a, n, Complex(x, y));
        return Vec2{zx.real(), zy.real()};
    };
    out.psi.value = [self, a, n](double x, double y) {
        return self.formal_power(a, n, Complex(x, y)).imag();
    };
    out.psi.grad = [self, a, n](double x, double y) {
        const auto [zx, zy] = self.formal_power_grad(a, n, Complex(x, y));
        return Vec2{zx.imag(), zy.imag()};
    };

    const GeneratingFunction& g = basis.recursion().generator();
    double sup = 0.0;
    for (int i = 0; i < grid.nx; ++i) {
        for (int j = 0; j < grid.ny; ++j) {
            const double x = grid.x(i), y = grid.y(j);
            const auto [zx, zy] = basis.formal_power_grad(a, n, Complex(x, y));
            const double f2 = g.f0_sq(y);
            const double r1 = zx.real() - zy.imag() / f2;
            const double r2 = zy.real() + zx.imag() / f2;
            sup = std::max({sup, std::abs(r1), std::abs(r2)});
        }
    }
    out.system_residual = sup;
    return out;
}

} // namespace beltrami
