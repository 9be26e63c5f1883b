#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "beltrami/fields.hpp"
#include "beltrami/profile.hpp"
#include "support/frozen.hpp"

using namespace beltrami;

namespace {

double fd2(const std::function<double(double)>& f, double y, double h = 1e-3) {
    // 5-point 4th-order second derivative
    return (-f(y + 2 * h) + 16 * f(y + h) - 30 * f(y) + 16 * f(y - h) -
            f(y - 2 * h)) /
           (12 * h * h);
}

} // namespace

TEST_CASE("parse_alpha accepts the cross-check profile") {
    const AlphaProfile a = parse_alpha("1/sqrt(1-y^2)", Interval(-0.95, 0.95));
    CHECK(a.kind == AlphaProfile::Kind::expression);
    CHECK(a.value(0.5) == doctest::Approx(frozen::alpha_half).epsilon(1e-14));
    CHECK(a.deriv(0.5) == doctest::Approx(0.5 * std::pow(0.75, -1.5)).epsilon(1e-13));
    CHECK(a.deriv2(0.0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("parse_alpha: constants and rejection of vanishing profiles") {
    const AlphaProfile two = parse_alpha("2", Interval(-1.0, 1.0));
    CHECK(two.value(0.3) == 2.0);
    CHECK(two.deriv(0.3) == 0.0);

    CHECK_NOTHROW(parse_alpha("y", Interval(0.5, 2.0)));
    CHECK_THROWS_AS(parse_alpha("y", Interval(-1.0, 1.0)), DomainError);
    CHECK_THROWS_AS(parse_alpha("1/y", Interval(-1.0, 1.0)), DomainError);
    CHECK_THROWS_AS(parse_alpha("1+", Interval(-1.0, 1.0)), ParseError);
}

TEST_CASE("tabulated alpha uses the spline and scans the samples") {
    std::vector<double> ys, as;
    for (int k = 0; k <= 256; ++k) {
        const double y = -1.0 + 2.0 * k / 256.0;
        ys.push_back(y);
        as.push_back(2.0 + std::sin(y));
    }
    const AlphaProfile a = tabulated_alpha(ys, as);
    CHECK(a.kind == AlphaProfile::Kind::tabulated);
    CHECK(a.value(0.37) == doctest::Approx(2.0 + std::sin(0.37)).epsilon(1e-8));
    CHECK(a.deriv(0.37) == doctest::Approx(std::cos(0.37)).epsilon(1e-5));
    CHECK(a.deriv2(0.37) == doctest::Approx(-std::sin(0.37)).epsilon(1e-2));

    // a table crossing zero is rejected
    std::vector<double> bad(ys.size());
    for (std::size_t k = 0; k < ys.size(); ++k) bad[k] = ys[k];
    CHECK_THROWS_AS(tabulated_alpha(ys, bad), DomainError);
}

TEST_CASE("antiderivative_A") {
    const AlphaProfile ex = preset_example_inv_sqrt();
    const AntiderivativeTable A = antiderivative_A(ex, 0.0);
    CHECK(A.value(0.0) == 0.0);
    CHECK(A.value(0.5) == doctest::Approx(frozen::asin_half).epsilon(1e-11));
    for (double y : {-0.9, -0.4, 0.2, 0.8}) {
        CHECK(A.value(y) == doctest::Approx(std::asin(y)).epsilon(1e-10));
        CHECK(A.derivative(y) == doctest::Approx(ex.value(y)).epsilon(1e-8));
    }

    const AlphaProfile k3 = preset_constant(3.0, Interval(-1.0, 2.0));
    const AntiderivativeTable A3 = antiderivative_A(k3, 0.5);
    CHECK(A3.value(0.5) == 0.0);
    CHECK(A3.value(1.7) == doctest::Approx(3.0 * 1.2).epsilon(1e-12));

    CHECK_THROWS_AS(antiderivative_A(ex, 2.0), OutOfDomain);
}

TEST_CASE("generating function of the cross-check profile") {
    const AlphaProfile ex = preset_example_inv_sqrt();
    const GeneratingFunction g(ex, 0.0, 1.0, 0.0);

    CHECK(g.f0(0.5) == doctest::Approx(frozen::f0_half).epsilon(1e-10));
    CHECK(g.f0(0.0) == doctest::Approx(1.0).epsilon(1e-12));

    // whole domain is the positivity window: S = cos(arcsin y) > 0
    CHECK(g.positivity().lo == doctest::Approx(-0.95));
    CHECK(g.positivity().hi == doctest::Approx(0.95));
    CHECK(g.table_interval().lo == doctest::Approx(-0.95));

    // f0' against central differences
    for (double y : {-0.7, -0.2, 0.3, 0.8}) {
        const double h = 1e-6;
        const double fd = (g.f0(y + h) - g.f0(y - h)) / (2.0 * h);
        CHECK(g.f0_deriv(y) == doctest::Approx(fd).epsilon(1e-6));
    }

    // algebraic identity alpha f0^2 = S^2
    for (double y : {-0.9, -0.33, 0.11, 0.62}) {
        const double s = g.S(y);
        CHECK(ex.value(y) * g.f0(y) * g.f0(y) ==
              doctest::Approx(s * s).epsilon(1e-12));
    }

    CHECK_THROWS_AS(GeneratingFunction(ex, 0.0, 0.0, 0.0), DomainError);
}

TEST_CASE("constant alpha with c1 = 1: one-sided window next to y_ref") {
    const AlphaProfile k2 = preset_constant(2.0, Interval(0.0, 1.5));
    const GeneratingFunction g(k2, 1.0, 0.0, 0.0);

    // f0 = sin(2 y) / sqrt(2), positive window (0, 1.5]
    for (double y : {0.1, 0.4, 0.75, 1.3}) {
        CHECK(g.f0(y) == doctest::Approx(std::sin(2.0 * y) / std::sqrt(2.0))
                             .epsilon(1e-10));
    }
    CHECK(g.positivity().lo == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(g.positivity().hi == doctest::Approx(1.5));
    // the zero endpoint is clamped away, the domain edge stays
    CHECK(g.table_interval().lo == doctest::Approx(0.03).epsilon(1e-6));
    CHECK(g.table_interval().hi == doctest::Approx(1.5));
}

TEST_CASE("sign flip keeps f0 positive at y_ref") {
    const AlphaProfile ex = preset_example_inv_sqrt();
    const GeneratingFunction g(ex, 0.0, -1.0, 0.0); // S would be -cos A
    CHECK(g.f0(0.0) > 0.0);
    CHECK(g.f0(0.5) == doctest::Approx(frozen::f0_half).epsilon(1e-10));
}

TEST_CASE("positivity window can vanish under aggressive clamping") {
    const AlphaProfile one = preset_constant(1.0, Interval(0.0, std::numbers::pi));
    CHECK_THROWS_AS(GeneratingFunction(one, 1.0, 0.0, 0.0, 1e-10, 2049, 0.6),
                    NoPositivityWindow);
}

TEST_CASE("schrodinger potential") {
    const AlphaProfile k2 = preset_constant(2.0, Interval(-1.0, 1.0));
    const auto r2 = schrodinger_potential(k2);
    CHECK(r2(0.3) == doctest::Approx(-4.0).epsilon(1e-14));

    const AlphaProfile ex = preset_example_inv_sqrt();
    const auto r = schrodinger_potential(ex);
    CHECK(r(0.0) == doctest::Approx(-1.5).epsilon(1e-13));
    CHECK_THROWS_AS(r(0.99), DomainError);

    // f0'' = r f0 for the generating function, FD oracle
    const GeneratingFunction g(ex, 0.0, 1.0, 0.0);
    for (double y : {-0.6, -0.15, 0.25, 0.7}) {
        const double lhs = fd2([&](double q) { return g.f0(q); }, y);
        const double rhs = r(y) * g.f0(y);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
    }
}

TEST_CASE("vekua coefficient") {
    const AlphaProfile ex = preset_example_inv_sqrt();
    const GeneratingFunction g(ex, 0.0, 1.0, 0.0);
    const auto coeff = vekua_coefficient(g);

    CHECK(coeff(0.0) == Complex(0.0, 0.0)); // f0'(0) = 0
    CHECK(coeff(0.5).real() == 0.0);        // purely imaginary by construction
    CHECK(coeff(0.5).imag() == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK_THROWS_AS(coeff(0.97), OutOfDomain);

    // constant alpha = 1, c1 = 1: coefficient is (i/2) cot(y - y_ref)
    const AlphaProfile one = preset_constant(1.0, Interval(0.0, 3.0));
    const GeneratingFunction gc(one, 1.0, 0.0, 0.0);
    const auto cc = vekua_coefficient(gc);
    CHECK(cc(std::numbers::pi / 4).imag() == doctest::Approx(0.5).epsilon(1e-10));
}
