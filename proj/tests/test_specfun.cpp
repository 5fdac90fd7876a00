#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sqb/quad.hpp"
#include "sqb/specfun.hpp"

using namespace sqb;
using std::numbers::pi;

TEST_CASE("gamma at classical points") {
    CHECK(std::abs(gamma(cplx(5.0, 0.0)) - 24.0) < 1e-12);
    CHECK(std::abs(gamma(cplx(0.5, 0.0)) - std::sqrt(pi)) < 1e-14);
    CHECK(std::abs(std::abs(gamma(cplx(1.0, 1.0))) - std::sqrt(pi / std::sinh(pi))) < 1e-14);
    CHECK(std::abs(std::abs(gamma(cplx(1.0, 1.0))) - 0.5215640) < 1e-7);
}

TEST_CASE("gamma reflection and reciprocal") {
    for (cplx z : {cplx(0.3, 0.7), cplx(-2.4, 1.5), cplx(0.5, 20.0)}) {
        const cplx lhs = gamma(z) * gamma(1.0 - z);
        const cplx rhs = pi / std::sin(pi * z);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
        CHECK(std::abs(rgamma(z) * gamma(z) - 1.0) < 1e-13);
    }
    CHECK(std::abs(rgamma(cplx(-3.0, 0.0))) < 1e-15);
    CHECK_THROWS_AS(gamma(cplx(-2.0, 0.0)), PoleError);
}

TEST_CASE("digamma") {
    CHECK(std::abs(digamma(cplx(2.0, 0.0)) - digamma(cplx(1.0, 0.0)) - 1.0) < 1e-14);
    CHECK(std::abs(digamma(cplx(0.5, 0.0)) - (-0.57721566490153286 - 2.0 * std::log(2.0))) < 1e-14);
    const cplx z(1.0, 1.0);
    const double h = 1e-6;
    const cplx fd = (gamma(z + h) - gamma(z - h)) / (2.0 * h * gamma(z));
    CHECK(std::abs(digamma(z) - fd) < 1e-8);
}

TEST_CASE("bessel_j special values") {
    CHECK(std::abs(bessel_j(cplx(0.0, 0.0), 1e-12) - 1.0) < 1e-14);
    CHECK(std::abs(bessel_j(cplx(0.5, 0.0), pi / 2) - 2.0 / pi) < 1e-14);
    CHECK(std::abs(bessel_j(cplx(0.0, 0.0), 2.0).real() - 0.22389077914123567) < 1e-15);
    CHECK(std::abs(bessel_j(cplx(0.0, 1.0), 2.0)) <= std::exp(2.0) * std::sqrt(std::sinh(pi) / pi));
}

TEST_CASE("bessel_j satisfies the Bessel equation") {
    for (cplx nu : {cplx(0.0, 0.0), cplx(0.5, 0.0), cplx(0.0, 1.0), cplx(1.0, 1.0)}) {
        for (double z : {0.5, 2.0, 7.5, 20.0}) {
            // Larger steps lose to truncation near z = 0.5, smaller ones to roundoff near z = 20.
            const double h = 1e-2;
            auto J = [&](double t) { return bessel_j(nu, t); };
            const cplx d1 = (J(z - 2 * h) - 8.0 * J(z - h) + 8.0 * J(z + h) - J(z + 2 * h)) / (12.0 * h);
            const cplx d2 =
                (-J(z - 2 * h) + 16.0 * J(z - h) - 30.0 * J(z) + 16.0 * J(z + h) - J(z + 2 * h)) / (12.0 * h * h);
            const cplx res = z * z * d2 + z * d1 + (z * z - nu * nu) * J(z);
            CHECK(std::abs(res) <= 1e-6 * std::max(1.0, std::abs(J(z)) * z * z));
        }
    }
}

TEST_CASE("bessel_j_dnu against finite differences in the order") {
    const double h = 1e-6;
    for (auto [nu, z] : {std::pair{cplx(0.0, 1.0), 1.0}, std::pair{cplx(0.0, 0.0), 2.0}}) {
        const cplx fd = (bessel_j(nu + h, z) - bessel_j(nu - h, z)) / (2.0 * h);
        CHECK(std::abs(bessel_j_dnu(nu, z) - fd) < 1e-8);
    }
    const cplx a = bessel_j_dnu(cplx(0.0, 1.0), 3.0);
    const cplx b = bessel_j_dnu(cplx(0.0, -1.0), 3.0);
    CHECK(std::abs(a - std::conj(b)) < 1e-14);
}

TEST_CASE("bessel_i") {
    CHECK(std::abs(bessel_i(cplx(0.0, 0.0), 1e-12) - 1.0) < 1e-14);
    CHECK(std::abs(bessel_i(cplx(0.5, 0.0), 1.0) - std::sqrt(2.0 / pi) * std::sinh(1.0)) < 1e-14);
    for (double x : {1e-3, 1e-1, 1.0, 10.0, 100.0, 1000.0}) {
        const double v = std::abs(bessel_i_scaled(cplx(0.0, 1.0), x / 2).real());
        CHECK(v <= 2.0 * std::max(1.0, 1.0 / std::sqrt(x)));
    }
    const double x = 3.0;
    CHECK(std::abs(bessel_i_scaled(cplx(0.0, 1.5), x) - std::exp(-x) * bessel_i(cplx(0.0, 1.5), x)) < 1e-14);
}

TEST_CASE("macdonald_k") {
    CHECK(std::abs(macdonald_k(0.0, 1.0) - 0.42102443824070834) < 1e-13);
    CHECK(macdonald_k(-1.3, 2.0) == doctest::Approx(macdonald_k(1.3, 2.0)).epsilon(1e-14));
    CHECK(std::abs(macdonald_k(1.0, 4.0)) <= std::pow(4.0, -0.25) / std::sqrt(std::sinh(pi)));
    CHECK(macdonald_k_scaled(0.5, 30.0) == doctest::Approx(std::exp(30.0) * macdonald_k(0.5, 30.0)).epsilon(1e-10));
}

TEST_CASE("struve_l1_imag") {
    CHECK(struve_l1_imag(0.0) == 0.0);
    // L_1(2iw) = -H_1(2w), H_1(z) = (2z/pi) int_0^1 sqrt(1-t^2) sin(zt) dt.
    const double w = 1.0;
    quad::QuadConfig qc;
    qc.abs_tol = 1e-14;
    qc.rel_tol = 1e-14;
    const double h1 = 2.0 * (2 * w) / pi *
                      quad::integrate<double>([&](double t) { return std::sqrt(1 - t * t) * std::sin(2 * w * t); },
                                              0.0, 1.0, qc)
                          .value;
    CHECK(std::abs(struve_l1_imag(w) + h1) < 1e-10);
    CHECK(std::abs(struve_l1_imag(50.0) + 2.0 / pi) < 0.05);
}
