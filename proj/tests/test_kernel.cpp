#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sqb/kernel.hpp"

using namespace sqb;
using std::numbers::pi;

TEST_CASE("phi_direct") {
    CHECK(phi_direct(0.0, 4.0) == doctest::Approx(0.08884787).epsilon(1e-7));
    const double j0 = bessel_j(cplx(0.0, 0.0), 2.0).real();
    CHECK(std::abs(phi_direct(0.0, 4.0) - std::sqrt(pi) * j0 * j0) < 1e-15);
    for (double x : {0.3, 2.0, 30.0}) CHECK(phi_direct(-1.7, x) == phi_direct(1.7, x));
}

TEST_CASE("phi_mellin_barnes") {
    CHECK(phi_mellin_barnes(1.0, 1.0) == doctest::Approx(phi_direct(1.0, 1.0)).epsilon(1e-8));
    auto spec = default_kernel_contour();
    spec.abscissa = 0.1;
    const double a = phi_mellin_barnes(0.5, 2.0, spec);
    spec.abscissa = 0.2;
    CHECK(std::abs(phi_mellin_barnes(0.5, 2.0, spec) - a) < 1e-9);
}

TEST_CASE("phi_mb integrand decays like |s|^{2 gamma - 3/2}") {
    const double gm = 0.125;
    const double r = std::abs(phi_mb_integrand(1.0, cplx(gm, 40.0))) / std::abs(phi_mb_integrand(1.0, cplx(gm, 20.0)));
    CHECK(r == doctest::Approx(std::pow(2.0, 2 * gm - 1.5)).epsilon(0.05));
    CHECK(std::abs(phi_mb_integrand(1.0, cplx(gm, -40.0))) == doctest::Approx(std::abs(phi_mb_integrand(1.0, cplx(gm, 40.0)))));
}

TEST_CASE("phi_cosine_rep") {
    CHECK(std::abs(phi_cosine_rep(0.0, 1.0) - phi_direct(0.0, 1.0)) < 1e-5);
    CHECK(std::abs(phi_cosine_rep(2.0, 0.5) - phi_direct(2.0, 0.5)) < 1e-5);
    // The u-integrand: sech(u/2) times a bounded Struve factor.
    const double w = std::cosh(20.0);
    CHECK(std::abs(struve_l1_imag(w) / std::cosh(20.0)) < 1e-8 * std::abs(struve_l1_imag(1.0)));
}

TEST_CASE("tri-method agreement on the grid") {
    for (double tau : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        for (double x : {0.1, 1.0, 5.0, 20.0}) {
            const double d = phi_direct(tau, x);
            CHECK(std::abs(d - phi_mellin_barnes(tau, x)) <= 1e-8 * (1 + std::abs(d)));
            CHECK(std::abs(d - phi_cosine_rep(tau, x)) <= 1e-5 * (1 + std::abs(d)));
        }
    }
}

TEST_CASE("third-order equation") {
    // Phi satisfies the equation with coefficient tau^2 + x + 1 on Phi'.
    for (auto [tau, x] : {std::pair{1.0, 2.0}, std::pair{0.0, 10.0}, std::pair{3.0, 0.5}})
        CHECK(ode_residual(tau, x, {3, 0.0, 4}, OdeForm::corrected).normalized() <= 1e-6);
    // With tau^2 + x - 7 the residual is of the size of the terms themselves.
    CHECK(ode_residual(1.0, 2.0, {3, 0.0, 4}, OdeForm::printed).normalized() > 1e-2);
}

TEST_CASE("kernel dispatch") {
    CHECK(phi({1.0, 1.0, parse_kernel_method("mb")}) == doctest::Approx(phi_direct(1.0, 1.0)).epsilon(1e-8));
    CHECK_THROWS(parse_kernel_method("bogus"));
}
