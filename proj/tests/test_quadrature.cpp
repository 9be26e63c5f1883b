#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "beltrami/quadrature.hpp"
#include "support/frozen.hpp"

using namespace beltrami;

TEST_CASE("interval invariants") {
    CHECK_THROWS_AS(Interval(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(Interval(2.0, -1.0), DomainError);
    CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()),
                    DomainError);
    const Interval iv(-1.0, 3.0);
    CHECK(iv.length() == 4.0);
    CHECK(iv.midpoint() == 1.0);
    CHECK(iv.contains(3.0));
    CHECK(!iv.contains(3.0000001));
}

TEST_CASE("integrate: constant") {
    const double v = integrate([](double) { return 1.0; }, Interval(0.0, 2.0), 1e-10);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("integrate: the two closed-form integrands of the cross-check profile") {
    const double a = integrate([](double y) { return std::pow(1.0 - y * y, 1.5); },
                               Interval(0.0, 0.5), 1e-10);
    CHECK(a == doctest::Approx(frozen::Y1_half).epsilon(1e-11));

    const double b = integrate([](double y) { return std::pow(1.0 - y * y, -1.5); },
                               Interval(0.0, 0.5), 1e-10);
    CHECK(b == doctest::Approx(frozen::Yt1_half).epsilon(1e-11));
}

TEST_CASE("integrate: polynomial exactness up to degree 5") {
    const double coef[6] = {0.7, -1.3, 2.1, 0.4, -3.7, 1.9};
    auto poly = [&](double y) {
        double v = 0.0, p = 1.0;
        for (double c : coef) {
            v += c * p;
            p *= y;
        }
        return v;
    };
    // antiderivative evaluated at the ends
    auto anti = [&](double y) {
        double v = 0.0, p = y;
        for (int k = 0; k < 6; ++k) {
            v += coef[k] * p / (k + 1);
            p *= y;
        }
        return v;
    };
    const Interval iv(-1.3, 2.4);
    const double exact = anti(iv.hi) - anti(iv.lo);
    const double got = integrate(poly, iv, 1e-10);
    CHECK(got == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("integrate: additivity within 2 tol") {
    auto f = [](double y) { return std::exp(std::sin(3.0 * y)); };
    const double tol = 1e-10;
    const double whole = integrate(f, Interval(-1.0, 2.0), tol);
    for (double split : {-0.3, 0.1, 1.7}) {
        const double parts = integrate(f, Interval(-1.0, split), tol) +
                             integrate(f, Interval(split, 2.0), tol);
        CHECK(std::abs(whole - parts) <= 2.0 * tol * std::max(1.0, std::abs(whole)));
    }
}

TEST_CASE("integrate: error paths") {
    CHECK_THROWS_AS(integrate([](double y) { return std::log(y); },
                              Interval(-1.0, 1.0), 1e-10),
                    NonFiniteSample);
    CHECK_THROWS_AS(integrate([](double y) { return std::sin(1e7 * y); },
                              Interval(0.0, 1.0), 1e-12),
                    NonConvergence);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, Interval(0.0, 1.0), 0.0),
                    DomainError);
}

TEST_CASE("cumulative: arcsin table from the cross-check alpha") {
    auto alpha = [](double y) { return 1.0 / std::sqrt(1.0 - y * y); };
    const AntiderivativeTable t =
        cumulative(alpha, 0.0, Interval(-0.95, 0.95), 1e-10, 2049);

    CHECK(t.value(0.0) == 0.0); // exact normalization at the base point
    CHECK(t.value(0.5) == doctest::Approx(frozen::asin_half).epsilon(1e-11));
    CHECK(t.value(-0.7) == doctest::Approx(std::asin(-0.7)).epsilon(1e-11));

    // derivative reproduces the integrand at interior nodes
    for (std::size_t k = 50; k < t.size(); k += 197) {
        const double y = t.node(k);
        CHECK(t.derivative(y) == doctest::Approx(alpha(y)).epsilon(1e-8));
    }
    // and interpolates it well between nodes
    CHECK(t.derivative(0.1234) == doctest::Approx(alpha(0.1234)).epsilon(1e-8));
}

TEST_CASE("cumulative: zero integrand gives the zero table") {
    const AntiderivativeTable t =
        cumulative([](double) { return 0.0; }, 0.5, Interval(0.0, 1.0), 1e-10, 64);
    for (double y : {0.0, 0.25, 0.5, 0.77, 1.0}) {
        CHECK(t.value(y) == 0.0);
    }
}

TEST_CASE("cumulative: f = 2y anchored at 0 is y^2") {
    const AntiderivativeTable t = cumulative([](double y) { return 2.0 * y; }, 0.0,
                                             Interval(-1.0, 1.0), 1e-10, 129);
    CHECK(t.value(0.7) == doctest::Approx(0.49).epsilon(1e-12));
    CHECK(t.value(-0.3) == doctest::Approx(0.09).epsilon(1e-12));
}

TEST_CASE("cumulative: node values equal the direct integral to tol") {
    auto f = [](double y) { return std::cos(2.0 * y) + 0.3 * y; };
    const double tol = 1e-10;
    const Interval iv(-0.5, 1.5);
    const AntiderivativeTable t = cumulative(f, 0.25, iv, tol, 257);
    for (std::size_t k = 3; k < t.size(); k += 61) {
        const double node = t.node(k);
        if (node == 0.25) continue;
        const double direct =
            node > 0.25 ? integrate(f, Interval(0.25, node), tol)
                        : -integrate(f, Interval(node, 0.25), tol);
        CHECK(t.value(node) == doctest::Approx(direct).epsilon(tol * 10));
    }
}

TEST_CASE("cumulative: argument checking") {
    auto f = [](double) { return 1.0; };
    CHECK_THROWS_AS(cumulative(f, 2.0, Interval(0.0, 1.0)), OutOfDomain);
    CHECK_THROWS_AS(cumulative(f, 0.5, Interval(0.0, 1.0), 1e-10, 8), DomainError);
}

TEST_CASE("table evaluation outside the node range") {
    const AntiderivativeTable t = cumulative([](double) { return 1.0; }, 0.0,
                                             Interval(0.0, 1.0), 1e-10, 64);
    CHECK_THROWS_AS(t.value(1.5), OutOfDomain);
    CHECK_THROWS_AS(t.derivative(-0.2), OutOfDomain);
}

TEST_CASE("natural cubic spline: value, first and second derivative") {
    std::vector<double> xs, ys;
    for (int k = 0; k <= 60; ++k) {
        const double x = -1.0 + 2.0 * k / 60.0;
        xs.push_back(x);
        ys.push_back(std::sin(2.0 * x));
    }
    const CubicSpline s(xs, ys);
    for (double q : {-0.81, -0.33, 0.02, 0.4142, 0.9}) {
        CHECK(s.value(q) == doctest::Approx(std::sin(2.0 * q)).epsilon(1e-6));
        CHECK(s.derivative(q) ==
              doctest::Approx(2.0 * std::cos(2.0 * q)).epsilon(1e-4));
        CHECK(s.second_derivative(q) ==
              doctest::Approx(-4.0 * std::sin(2.0 * q)).epsilon(2e-2));
    }
    CHECK_THROWS_AS(s.value(1.2), OutOfDomain);
    CHECK_THROWS_AS(CubicSpline({0.0, 0.0, 1.0}, {1.0, 2.0, 3.0}), DomainError);
}
