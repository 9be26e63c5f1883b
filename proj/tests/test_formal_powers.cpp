#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "beltrami/formal_powers.hpp"
#include "support/frozen.hpp"

using namespace beltrami;

namespace {

std::shared_ptr<const RecursionTable> example_table(int n_max) {
    static std::shared_ptr<const RecursionTable> cached[2];
    const int slot = n_max <= 6 ? 0 : 1;
    const int depth = n_max <= 6 ? 6 : 10;
    if (!cached[slot]) {
        const GeneratingFunction g(preset_example_inv_sqrt(), 0.0, 1.0, 0.0);
        cached[slot] = std::make_shared<const RecursionTable>(g, 0.0, depth);
    }
    return cached[slot];
}

} // namespace

TEST_CASE("recursion tables reproduce the closed-form integrals") {
    const auto t = example_table(3);
    CHECK(t->Y(1, 0.5) == doctest::Approx(frozen::Y1_half).epsilon(1e-10));
    CHECK(t->Ytilde(1, 0.5) == doctest::Approx(frozen::Yt1_half).epsilon(1e-10));
    CHECK(t->Y(2, 0.5) == doctest::Approx(frozen::Y2_half).epsilon(1e-9));
    CHECK(t->Ytilde(2, 0.5) == doctest::Approx(frozen::Yt2_half).epsilon(1e-9));
    CHECK(t->Y(3, 0.5) == doctest::Approx(frozen::Y3_half).epsilon(1e-9));
    CHECK(t->Ytilde(3, 0.5) == doctest::Approx(frozen::Yt3_half).epsilon(1e-9));
}

TEST_CASE("level zero is one, higher levels vanish at y0") {
    const auto t = example_table(3);
    for (double y : {-0.9, -0.2, 0.0, 0.5, 0.94}) {
        CHECK(t->Y(0, y) == 1.0);
        CHECK(t->Ytilde(0, y) == 1.0);
    }
    for (int n = 1; n <= 3; ++n) {
        CHECK(t->Y(n, 0.0) == 0.0);
        CHECK(t->Ytilde(n, 0.0) == 0.0);
    }
}

TEST_CASE("Y1 is odd about y0 = 0 for the even cross-check profile") {
    const auto t = example_table(3);
    for (double y : {0.2, 0.45, 0.8}) {
        CHECK(t->Y(1, -y) == doctest::Approx(-t->Y(1, y)).epsilon(1e-12));
        CHECK(t->Ytilde(1, -y) == doctest::Approx(-t->Ytilde(1, y)).epsilon(1e-12));
    }
}

TEST_CASE("table derivatives follow the recursion identity and match FD") {
    const auto t = example_table(3);
    const double h = 1e-5;
    for (int n = 1; n <= 3; ++n) {
        for (double y : {-0.5, 0.1, 0.6}) {
            const double fd = (t->Y(n, y + h) - t->Y(n, y - h)) / (2.0 * h);
            CHECK(t->Y_deriv(n, y) == doctest::Approx(fd).epsilon(1e-6));
            const double fdt = (t->Ytilde(n, y + h) - t->Ytilde(n, y - h)) / (2.0 * h);
            CHECK(t->Ytilde_deriv(n, y) == doctest::Approx(fdt).epsilon(1e-6));
        }
    }
    // second derivative vs FD of the first
    for (double y : {-0.4, 0.3}) {
        const double fd =
            (t->Y_deriv(2, y + h) - t->Y_deriv(2, y - h)) / (2.0 * h);
        CHECK(t->Y_deriv2(2, y) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("formal power order zero is the constant a") {
    const FormalPowerBasis basis(example_table(3), Complex(0.0, 0.0));
    for (Complex a : {Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-2.0, 0.7)}) {
        for (Complex z : {Complex(0.3, 0.5), Complex(-0.6, -0.8)}) {
            CHECK(basis.formal_power(a, 0, z) == a);
        }
    }
}

TEST_CASE("formal powers match the frozen example values") {
    const FormalPowerBasis basis(example_table(3), Complex(0.0, 0.0));
    const Complex z(0.3, 0.5);

    const Complex z1i = basis.formal_power(Complex(0, 1), 1, z);
    CHECK(z1i.real() == doctest::Approx(-frozen::Yt1_half).epsilon(1e-10));
    CHECK(z1i.imag() == doctest::Approx(0.3).epsilon(1e-14));

    const Complex z2i = basis.formal_power(Complex(0, 1), 2, z);
    CHECK(z2i.real() == doctest::Approx(frozen::Z2i_re).epsilon(1e-9));
    CHECK(z2i.imag() == doctest::Approx(frozen::Z2i_im).epsilon(1e-9));

    const Complex z2u = basis.formal_power(Complex(1, 0), 2, z);
    CHECK(z2u.real() == doctest::Approx(frozen::Z2u_re).epsilon(1e-9));
    CHECK(z2u.imag() == doctest::Approx(frozen::Z2u_im).epsilon(1e-9));
}

TEST_CASE("linearity in a") {
    const FormalPowerBasis basis(example_table(3), Complex(0.0, 0.0));
    const Complex z(-0.4, 0.25);
    for (int n = 0; n <= 3; ++n) {
        const Complex a(1.7, -0.9);
        const Complex lhs = basis.formal_power(a, n, z);
        const Complex rhs = a.real() * basis.formal_power(Complex(1, 0), n, z) +
                            a.imag() * basis.formal_power(Complex(0, 1), n, z);
        CHECK(std::abs(lhs - rhs) < 1e-14);
    }
}

TEST_CASE("formal powers vanish exactly at the center") {
    const Complex z0(0.2, -0.3);
    const GeneratingFunction g(preset_example_inv_sqrt(), 0.0, 1.0, 0.0);
    const FormalPowerBasis basis(
        std::make_shared<const RecursionTable>(g, z0.imag(), 5), z0);
    for (int n = 1; n <= 5; ++n) {
        CHECK(basis.formal_power(Complex(1, 0), n, z0) == Complex(0.0, 0.0));
        CHECK(basis.formal_power(Complex(0, 1), n, z0) == Complex(0.0, 0.0));
    }
}

TEST_CASE("order and domain violations") {
    const FormalPowerBasis basis(example_table(3), Complex(0.0, 0.0));
    CHECK_THROWS_AS(basis.formal_power(Complex(1, 0), 7, Complex(0, 0)),
                    NOrderExceeded);
    CHECK_THROWS_AS(basis.formal_power(Complex(1, 0), 1, Complex(0.0, 0.99)),
                    OutOfDomain);
}

TEST_CASE("gradient: closed forms at order one") {
    const FormalPowerBasis basis(example_table(3), Complex(0.0, 0.0));
    const auto [zx0, zy0] = basis.formal_power_grad(Complex(1, 0), 0, Complex(0.4, 0.1));
    CHECK(zx0 == Complex(0.0, 0.0));
    CHECK(zy0 == Complex(0.0, 0.0));

    // *Z^(1)(i,0;z) = -Yt1 + i x: dx = i, dy = -(1-y^2)^{-3/2}
    const double y = 0.35;
    const auto [zx, zy] = basis.formal_power_grad(Complex(0, 1), 1, Complex(0.2, y));
    CHECK(std::abs(zx - Complex(0.0, 1.0)) < 1e-14);
    CHECK(zy.real() ==
          doctest::Approx(-std::pow(1.0 - y * y, -1.5)).epsilon(1e-9));
    CHECK(zy.imag() == 0.0);
}

TEST_CASE("gradient and hessian match finite differences, random orders") {
    const FormalPowerBasis basis(example_table(10), Complex(0.0, 0.0));
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ux(-0.8, 0.8), uy(-0.7, 0.7);
    const double h = 1e-5;
    for (int trial = 0; trial < 24; ++trial) {
        const int n = 1 + trial % 5;
        const Complex a = trial % 2 ? Complex(1, 0) : Complex(0, 1);
        const Complex z(ux(rng), uy(rng));
        const auto [zx, zy] = basis.formal_power_grad(a, n, z);

        const Complex fx = (basis.formal_power(a, n, z + Complex(h, 0)) -
                            basis.formal_power(a, n, z - Complex(h, 0))) /
                           (2.0 * h);
        const Complex fy = (basis.formal_power(a, n, z + Complex(0, h)) -
                            basis.formal_power(a, n, z - Complex(0, h))) /
                           (2.0 * h);
        CHECK(std::abs(zx - fx) < 1e-6 * std::max(1.0, std::abs(fx)));
        CHECK(std::abs(zy - fy) < 1e-6 * std::max(1.0, std::abs(fy)));

        const auto hess = basis.formal_power_hessian(a, n, z);
        const auto gxp = basis.formal_power_grad(a, n, z + Complex(h, 0));
        const auto gxm = basis.formal_power_grad(a, n, z - Complex(h, 0));
        const auto gyp = basis.formal_power_grad(a, n, z + Complex(0, h));
        const auto gym = basis.formal_power_grad(a, n, z - Complex(0, h));
        CHECK(std::abs(hess.dxx - (gxp.first - gxm.first) / (2.0 * h)) < 1e-5);
        CHECK(std::abs(hess.dxy - (gyp.first - gym.first) / (2.0 * h)) < 1e-5);
        CHECK(std::abs(hess.dyy - (gyp.second - gym.second) / (2.0 * h)) < 1e-5);
    }
}

TEST_CASE("degenerate generating pair: analytic powers a (z - z0)^n") {
    const GeneratingFunction triv = GeneratingFunction::trivial(Interval(-1.0, 1.0));
    const Complex z0(0.1, 0.2);
    const FormalPowerBasis basis(
        std::make_shared<const RecursionTable>(triv, z0.imag(), 6), z0);
    for (int n = 0; n <= 6; ++n) {
        for (Complex a : {Complex(1, 0), Complex(0, 1), Complex(0.3, -1.1)}) {
            for (Complex z : {Complex(0.8, 0.6), Complex(-0.5, -0.9)}) {
                const Complex want = a * std::pow(z - z0, n);
                CHECK(std::abs(basis.formal_power(a, n, z) - want) < 1e-12);
            }
        }
    }
}

TEST_CASE("second-kind pair: system residual") {
    const FormalPowerBasis basis(example_table(3), Complex(0.0, 0.0));
    const ProbeGrid grid{-0.7, 0.7, 15, -0.6, 0.6, 15};

    // n=1, a=1: phi = x, psi = Y1 -- exact by the recursion identity
    const SecondKindPair p1 = second_kind_pair(basis, Complex(1, 0), 1, grid);
    CHECK(p1.system_residual == 0.0);
    CHECK(p1.phi.value(0.3, 0.2) == doctest::Approx(0.3).epsilon(1e-14));

    // n=0: phi constant, psi = 0
    const SecondKindPair p0 = second_kind_pair(basis, Complex(1, 0), 0, grid);
    CHECK(p0.system_residual == 0.0);
    CHECK(p0.psi.value(0.4, -0.2) == 0.0);

    for (int n = 2; n <= 3; ++n) {
        for (Complex a : {Complex(1, 0), Complex(0, 1)}) {
            const SecondKindPair p = second_kind_pair(basis, a, n, grid);
            CHECK(p.system_residual < 1e-6);
        }
    }
}
