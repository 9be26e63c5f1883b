#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "beltrami/expression.hpp"

using namespace beltrami;

namespace {

struct Sample {
    std::string text;
    std::function<double(double)> direct;
};

const std::vector<Sample>& samples() {
    static const std::vector<Sample> s = {
        {"1/sqrt(1-y^2)", [](double y) { return 1.0 / std::sqrt(1.0 - y * y); }},
        {"2", [](double) { return 2.0; }},
        {"y", [](double y) { return y; }},
        {"sin(y)*cos(y)", [](double y) { return std::sin(y) * std::cos(y); }},
        {"exp(-y^2/2)", [](double y) { return std::exp(-y * y / 2.0); }},
        {"y^3 - 2*y + 1", [](double y) { return y * y * y - 2.0 * y + 1.0; }},
        {"2^y", [](double y) { return std::pow(2.0, y); }},
        {"(y+2)^(-2)", [](double y) { return std::pow(y + 2.0, -2.0); }},
        {"-y+3", [](double y) { return -y + 3.0; }},
        {"abs(y)+1", [](double y) { return std::abs(y) + 1.0; }},
        {"asin(y/2)", [](double y) { return std::asin(y / 2.0); }},
        {"tan(y/4)", [](double y) { return std::tan(y / 4.0); }},
        {"log(y+2)", [](double y) { return std::log(y + 2.0); }},
        {"sqrt(y^2+1)", [](double y) { return std::sqrt(y * y + 1.0); }},
        {"1/(1+y^2)", [](double y) { return 1.0 / (1.0 + y * y); }},
        {"(y+1)*(y-1)", [](double y) { return (y + 1.0) * (y - 1.0); }},
        {"3.5e-1*y", [](double y) { return 0.35 * y; }},
        {"y^2^3", [](double y) { return std::pow(y, 8.0); }}, // right associative
        {"2^-2*y", [](double y) { return 0.25 * y; }},
        {"1 - -y", [](double y) { return 1.0 + y; }},
    };
    return s;
}

const double probes[] = {-0.8, -0.31, 0.0, 0.17, 0.5, 0.93};

} // namespace

TEST_CASE("parse/eval agrees with direct evaluation") {
    for (const Sample& s : samples()) {
        const auto tree = expr::parse(s.text);
        for (double y : probes) {
            const double want = s.direct(y);
            const double got = expr::eval(tree, y);
            INFO(s.text, " at y=", y);
            CHECK(got == doctest::Approx(want).epsilon(1e-15));
        }
    }
}

TEST_CASE("precedence and associativity") {
    CHECK(expr::eval(expr::parse("2+3*4"), 0.0) == 14.0);
    CHECK(expr::eval(expr::parse("(2+3)*4"), 0.0) == 20.0);
    CHECK(expr::eval(expr::parse("2*3^2"), 0.0) == 18.0);
    CHECK(expr::eval(expr::parse("2^3^2"), 0.0) == 512.0); // right associative
    CHECK(expr::eval(expr::parse("-2^2"), 0.0) == -4.0);
    CHECK(expr::eval(expr::parse("2^-3"), 0.0) == 0.125);
    CHECK(expr::eval(expr::parse("6/3/2"), 0.0) == 1.0); // left associative
    CHECK(expr::eval(expr::parse("6-3-2"), 0.0) == 1.0);
}

TEST_CASE("symbolic derivative matches central differences") {
    const double h = 1e-5;
    for (const Sample& s : samples()) {
        const auto tree = expr::parse(s.text);
        const auto d = expr::derivative(tree);
        for (double y : probes) {
            if (s.text == "abs(y)+1" && std::abs(y) < 2.0 * h) continue; // kink
            const double fd = (s.direct(y + h) - s.direct(y - h)) / (2.0 * h);
            const double got = expr::eval(d, y);
            INFO("d/dy ", s.text, " at y=", y);
            CHECK(got == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("derivative of the cross-check profile") {
    const auto d = expr::derivative(expr::parse("1/sqrt(1-y^2)"));
    const double want = 0.5 * std::pow(0.75, -1.5);
    CHECK(expr::eval(d, 0.5) == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("second symbolic derivative stays evaluable") {
    const auto tree = expr::parse("1/sqrt(1-y^2)");
    const auto d2 = expr::derivative(expr::derivative(tree));
    // alpha'' = (1-y^2)^{-3/2} + 3 y^2 (1-y^2)^{-5/2}
    auto want = [](double y) {
        const double u = 1.0 - y * y;
        return std::pow(u, -1.5) + 3.0 * y * y * std::pow(u, -2.5);
    };
    for (double y : {0.0, 0.4, -0.7}) {
        CHECK(expr::eval(d2, y) == doctest::Approx(want(y)).epsilon(1e-12));
    }
}

TEST_CASE("parse errors carry a position") {
    auto pos_of = [](const std::string& text) {
        try {
            expr::parse(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    CHECK(pos_of("1+") == 2);
    CHECK(pos_of("sin(y") == 5);
    CHECK(pos_of("foo(y)") == 0);
    CHECK(pos_of("y y") == 2);
    CHECK(pos_of("") == 0);
    CHECK(pos_of("(1+2") == 4);
    CHECK(pos_of("1 + $") == 4);
    CHECK(pos_of("x") == 0); // only y is a variable
}

TEST_CASE("to_string output reparses to the same function") {
    for (const Sample& s : samples()) {
        const auto tree = expr::parse(s.text);
        const auto again = expr::parse(expr::to_string(tree));
        for (double y : probes) {
            CHECK(expr::eval(tree, y) == expr::eval(again, y));
        }
    }
}
