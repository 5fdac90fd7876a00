#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sqb/catalog.hpp"
#include "sqb/errors.hpp"
#include "sqb/pde.hpp"
#include "sqb/transform.hpp"

using namespace sqb;
using std::numbers::pi;

TEST_CASE("wedge specification") {
    WedgeSpec w;
    CHECK_NOTHROW(w.validate());
    w.beta = 2 * pi;
    CHECK_THROWS_AS(w.validate(), DomainError);
    w.beta = pi;
    CHECK(w.contains_angle(0.0));
    CHECK_FALSE(w.contains_angle(pi));
    const auto slow = SampledFunction::from_callable(
        Domain::real_line, [](double t) { return 1.0 / std::cosh(t); }, {Decay::Kind::exp, 1.0}, "sech");
    CHECK_THROWS_AS(check_wedge_integrability(slow, w), IntegrabilityError);
}

TEST_CASE("initial condition") {
    WedgeSpec w;
    const std::vector<double> xs = {0.1, 1.0, 5.0, 20.0};
    CHECK(ivp_check(catalog_entry("gauss").fn, w, xs) <= 1e-10);
    CHECK(ivp_check(catalog_entry("t2gauss").fn, w, xs) <= 1e-10);
    const auto zero =
        SampledFunction::from_callable(Domain::real_line, [](double) { return 0.0; }, {Decay::Kind::exp, 10.0});
    CHECK(evaluate_u(zero, 2.0, 1.0, w) == 0.0);
}

TEST_CASE("u decays along a ray") {
    WedgeSpec w;
    const auto& g = catalog_entry("gauss").fn;
    const double a = std::abs(evaluate_u(g, 100.0, pi / 4, w));
    const double b = std::abs(evaluate_u(g, 1e4, pi / 4, w));
    CHECK(std::isfinite(a));
    CHECK(b < a);
    CHECK(b < 1e-2);
}

TEST_CASE("theta derivatives under the integral") {
    WedgeSpec w;
    const auto& g = catalog_entry("gauss").fn;
    const double h = 1e-4;
    const double fd = (evaluate_u(g, 2.0, 0.5 + h, w) - evaluate_u(g, 2.0, 0.5 - h, w)) / (2 * h);
    CHECK(evaluate_u_dtheta(g, 2.0, 0.5, 1, w) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("third-order equation on the wedge") {
    WedgeSpec w;
    const auto& g = catalog_entry("gauss").fn;
    for (auto [r, th] : {std::pair{2.0, 0.5}, std::pair{5.0, 1.0}, std::pair{0.5, 0.2}}) {
        // u solves the equation with (1 + 1/r) u_r ...
        CHECK(pde_residual_polar(g, r, th, w, PdeForm::corrected).normalized() <= 1e-4);
        // ... and the Cartesian form agrees with the polar one.
        const auto p = pde_residual_polar(g, r, th, w, PdeForm::printed);
        const auto c = pde_residual_cartesian(g, r * std::cos(th), r * std::sin(th), w, PdeForm::printed);
        CHECK(std::abs(p.residual - c.residual) <= 1e-4 * p.scale);
    }
}
