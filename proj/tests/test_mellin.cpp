#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sqb/catalog.hpp"
#include "sqb/errors.hpp"
#include "sqb/mellin.hpp"

using namespace sqb;
using std::numbers::pi;

namespace {

SampledFunction exp_neg(double c = 1.0) {
    return SampledFunction::from_callable(
        Domain::half_line, [c](double x) { return std::exp(-c * x); }, {Decay::Kind::exp, c}, "exp");
}

SampledFunction indicator() {
    return SampledFunction::from_callable(
        Domain::half_line, [](double x) { return x < 1.0 ? 1.0 : 0.0; }, {Decay::Kind::exp, 1.0}, "indicator");
}

} // namespace

TEST_CASE("mellin transform examples") {
    CHECK(std::abs(mellin_transform(exp_neg(), cplx(3.0, 0.0)) - 2.0) < 1e-9);
    CHECK(std::abs(mellin_transform(indicator(), cplx(2.0, 0.0)) - 0.5) < 1e-9);
    const cplx s(0.5, 1.0);
    const cplx m = mellin_transform(catalog_entry("k0sqrt").fn, s);
    CHECK(std::abs(m - gamma(s) * gamma(s)) < 1e-8);
}

TEST_CASE("inverse mellin examples") {
    auto g = [](cplx s) { return gamma(s); };
    CHECK(std::abs(inverse_mellin(g, MellinStrip(0.5), 2.0) - std::exp(-2.0)) < 1e-10);
    auto g2 = [](cplx s) { return gamma(s) * gamma(s); };
    CHECK(std::abs(inverse_mellin(g2, MellinStrip(0.5), 0.25) - 2.0 * macdonald_k(0.0, 1.0)) < 1e-10);
    CHECK_THROWS_AS(inverse_mellin([](cplx s) { return gamma(s) / gamma(s); }, MellinStrip(0.5), 1.0),
                    TruncationWarning);
}

TEST_CASE("mellin round trip") {
    for (const char* name : {"k0sqrt"}) {
        const auto& f = catalog_entry(name).fn;
        auto fs = [&](cplx s) { return mellin_transform(f, s); };
        for (double x : {0.1, 1.0, 10.0}) {
            const double back = inverse_mellin(fs, MellinStrip(0.5), x).real();
            CHECK(std::abs(back - f(x)) <= 1e-7 * std::abs(f(x)));
        }
    }
    const auto f = exp_neg();
    auto fs = [&](cplx s) { return mellin_transform(f, s); };
    for (double x : {0.1, 1.0, 10.0}) CHECK(std::abs(inverse_mellin(fs, MellinStrip(0.5), x).real() - f(x)) <= 1e-7 * f(x));
}

TEST_CASE("parseval") {
    CHECK(parseval_check(exp_neg(), exp_neg(), MellinStrip(0.5)).residual <= 1e-8);
    const auto r = parseval_check(exp_neg(), indicator(), MellinStrip(0.5));
    CHECK(std::abs(r.lhs - (1.0 - std::exp(-1.0))) <= 1e-8);
    CHECK(r.residual <= 1e-8);
    CHECK(parseval_check(exp_neg(2.0), indicator(), MellinStrip(0.5)).residual <= 1e-8);
}

TEST_CASE("gamma cosine pair") {
    CHECK(gamma_cosine_pair_check(cplx(1.0, 0.0), 0.0) <= 1e-9);
    CHECK(gamma_cosine_pair_check(cplx(1.0, 0.0), 1.0) <= 1e-9);
    CHECK(gamma_cosine_pair_check(cplx(1.5, 0.0), 2.0) <= 1e-9);
    CHECK(std::abs(gamma_product_cosine_integral(cplx(1.0, 0.0), 1.0) - gamma_product_cosine_closed(cplx(1.0, 0.0), 1.0)) <=
          1e-9);
}

TEST_CASE("strip validation") {
    CHECK_THROWS_AS(MellinStrip(0.5, 3.0), StripError);
    CHECK(MellinStrip(0.25).admissible_for_forward());
    CHECK_FALSE(MellinStrip(0.6).admissible_for_forward());
}
