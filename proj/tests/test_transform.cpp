#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sqb/catalog.hpp"
#include "sqb/errors.hpp"
#include "sqb/transform.hpp"

using namespace sqb;
using std::numbers::pi;

namespace {

const double kSqrtPi = std::sqrt(pi);

SampledFunction zero(Domain d) {
    return SampledFunction::from_callable(d, [](double) { return 0.0; }, {Decay::Kind::exp, 10.0}, "zero");
}

} // namespace

TEST_CASE("forward transform of exp(-3 sqrt x)") {
    const auto& e = catalog_entry("exp3sqrt");
    CHECK(weighted_norm(e.fn) == doctest::Approx(2.0).epsilon(1e-9));
    const auto res = forward_F(e.fn, {0.0, 1.0, 2.5, 5.0});
    for (double v : res.values) CHECK(std::abs(v) <= 2.0 * kSqrtPi);
    const auto z = forward_F(zero(Domain::half_line), {0.0, 1.0});
    CHECK(z.values[0] == 0.0);
    CHECK(z.values[1] == 0.0);
}

TEST_CASE("forward routes for 2 K_0(2 sqrt x)") {
    const auto& e = catalog_entry("k0sqrt");
    CHECK(std::isinf(weighted_norm(e.fn)));
    const double closed = (*e.ff)(1.0);
    const double direct = forward_F_at(e.fn, 1.0);
    const double pars = forward_F_at(e.fn, 1.0, {}, ForwardRoute::parseval, e.mellin);
    const double via = forward_F_via_phi(e.fn, {1.0}, MellinStrip(0.25), {}, e.mellin).values[0];
    CHECK(std::abs(direct - via) <= 1e-6 * std::abs(via));
    CHECK(std::abs(direct - closed) <= 1e-9);
    CHECK(std::abs(pars - closed) <= 1e-12 * std::abs(closed));
    // Relative accuracy survives far into the tail on the contour route.
    const double far = forward_F_at(e.fn, 20.0, {}, ForwardRoute::parseval, e.mellin);
    CHECK(std::abs(far - (*e.ff)(20.0)) <= 1e-10 * std::abs((*e.ff)(20.0)));
    // Bounded by a multiple of sech(pi tau).
    for (double tau : {0.0, 2.0, 4.0, 6.0})
        CHECK(std::abs(forward_F_at(e.fn, tau, {}, ForwardRoute::parseval, e.mellin)) * std::cosh(pi * tau) <=
              std::sqrt(pi / 2) * (1 + 1e-12));
    CHECK_THROWS_AS(forward_F_via_phi(e.fn, {1.0}, MellinStrip(0.6), {}, e.mellin), StripError);
}

TEST_CASE("inverse transform") {
    const auto& g = catalog_entry("gauss").fn;
    CHECK(l1_norm(g) == doctest::Approx(kSqrtPi).epsilon(1e-9));
    const auto res = inverse_G(g, {0.01, 1.0, 10.0, 100.0});
    for (double v : res.values) CHECK(std::abs(v) <= pi);

    const auto odd = SampledFunction::from_callable(
        Domain::real_line, [](double t) { return t * std::exp(-t * t); }, {Decay::Kind::exp, 1.0}, "odd");
    CHECK(std::abs(inverse_G_at(odd, 1.0)) <= 1e-10);

    const auto& t2 = catalog_entry("t2gauss").fn;
    quad::QuadConfig fine;
    fine.abs_tol = 1e-14;
    fine.rel_tol = 1e-14;
    auto integrand = [&](double tau) { return 2.0 * phi_direct(tau, 1.0) * t2(tau); };
    const double oracle = quad::integrate<double>(integrand, 0.0, 12.0, fine, 48).value;
    CHECK(std::abs(inverse_G_at(t2, 1.0) - oracle) <= 1e-8);
}

TEST_CASE("Mellin identity for G") {
    const auto& g = catalog_entry("gauss").fn;
    CHECK(mellin_identity_check(g, MellinStrip(0.25), 1.0).residual <= 1e-5);
    const auto z = mellin_identity_check(zero(Domain::real_line), MellinStrip(0.25), 1.0);
    CHECK(z.lhs == 0.0);
    CHECK(z.rhs == 0.0);
    CHECK_THROWS_AS(mellin_identity_check(g, MellinStrip(0.6), 1.0), StripError);
}

TEST_CASE("order derivative pair") {
    const double tau = 1.0, x = 1.0, h = 1e-6;
    const double z = std::sqrt(x);
    auto prod = [&](double eps) {
        return (bessel_j(cplx(0.0, tau), z) * bessel_j(cplx(eps, -tau), z) +
                bessel_j(cplx(0.0, -tau), z) * bessel_j(cplx(eps, tau), z))
            .real();
    };
    const double fd = (prod(h) - prod(-h)) / (2 * h);
    CHECK(std::abs(eps_deriv_pair(tau, x) - fd) <= 1e-7);
    CHECK(eps_deriv_pair(-1.3, 2.0) == doctest::Approx(eps_deriv_pair(1.3, 2.0)).epsilon(1e-13));
    CHECK(std::isfinite(eps_deriv_pair(1.0, 1e-10)));
}

TEST_CASE("kernel K") {
    CHECK(kernel_K_quadrature(1.0, 1.0) == doctest::Approx(kernel_K_closed(1.0, 1.0)).epsilon(1e-5));
    double prev = 0.0;
    for (double x : {0.5, 1.0, 2.0, 4.0}) {
        const double k = kernel_K_quadrature(x, 0.7);
        CHECK(k < 0.0);
        if (prev != 0.0) CHECK(std::abs(k) < std::abs(prev));
        prev = k;
    }
}

TEST_CASE("K_{ix} I_z integral") {
    CHECK(macdonald_bessel_i_integral(1.0, 0.5) == doctest::Approx(0.8).epsilon(1e-8));
    CHECK(macdonald_bessel_i_integral(2.0, 0.25) == doctest::Approx(1.0 / 4.0625).epsilon(1e-8));
}

TEST_CASE("inversion of F") {
    const auto& e = catalog_entry("k0sqrt");
    const auto ff = SampledFunction::from_callable(Domain::half_line, *e.ff, {Decay::Kind::sech_pi, 0.0}, "Ff");
    CHECK_THROWS_AS(invert_F(ff, {1.0}), IntegrabilityError);
    InvertFOptions opt;
    opt.regularization = 10.0;
    const auto res = invert_F(ff, {1.0}, {}, {1, 0.0, 4}, opt);
    CHECK(res.regularized);
    CHECK(res.tau_max == 60.0);
    CHECK(std::abs(res.values[0] - e.fn(1.0)) <= 1e-2 * e.fn(1.0));
    CHECK(invert_F(zero(Domain::half_line), {0.5, 2.0}).values == std::vector<double>{0.0, 0.0});
}

TEST_CASE("Theta kernel") {
    const double a = theta_kernel(1.0, 1.0, ThetaRoute::integral);
    CHECK(a == doctest::Approx(theta_kernel(1.0, 1.0, ThetaRoute::corrected)).epsilon(1e-7));
    const double head = kSqrtPi / std::sinh(pi);
    CHECK(a - head < 0.0);
    // The y K form without the 1/sqrt(pi) is off by exactly that factor.
    CHECK((theta_kernel(1.0, 1.0, ThetaRoute::printed) - head) / (a - head) == doctest::Approx(kSqrtPi).epsilon(1e-6));
    CHECK(std::isfinite(theta_kernel(1.0, 1e-8)));
    CHECK_THROWS_AS(theta_kernel(0.0, 1.0), DomainError);
}

TEST_CASE("inversion of G") {
    CHECK(invert_G(zero(Domain::half_line), {0.5, 1.0}).values == std::vector<double>{0.0, 0.0});
    const auto gg = SampledFunction::from_samples(Domain::half_line, {0.01, 1.0, 4.0, 9.0, 16.0, 25.0},
                                                  {0.05, 0.3, 0.2, 0.1, 0.05, 0.02}, {Decay::Kind::exp, 1.0}, "Gg");
    const auto r = invert_G(gg, {0.7, -0.7});
    CHECK(r.values[0] == doctest::Approx(r.values[1]).epsilon(1e-12));
}

TEST_CASE("inversion of G for tau^2 e^{-tau^2}") {
    const auto& t2 = catalog_entry("t2gauss");
    const auto gg = SampledFunction::from_callable(
        Domain::half_line, [&](double y) { return inverse_G_at(t2.fn, y); }, {Decay::Kind::power, 0.5}, "Gg");
    const double c = invert_G(gg, {1.0}, {}, {1, 0.0, 4}, InvertGForm::corrected).values[0];
    CHECK(c == doctest::Approx(t2.fn(1.0)).epsilon(1e-3));
    // The printed coefficients return sqrt(pi) g up to the same quadrature error.
    const double p = invert_G(gg, {1.0}, {}, {1, 0.0, 4}, InvertGForm::printed).values[0];
    CHECK(p == doctest::Approx(std::sqrt(pi) * t2.fn(1.0)).epsilon(2e-3));
}
