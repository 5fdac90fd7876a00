#include "sqb/catalog.hpp"

#include <cmath>
#include <numbers>

namespace sqb {

namespace {

using std::numbers::pi;

// Gaussian tails beat every exponential rate; this one stands in for that.
constexpr double kGaussRate = 40.0;

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> out;

    {
        CatalogEntry e;
        e.name = "exp3sqrt";
        e.description = "f(x) = exp(-3 sqrt x)";
        e.fn = SampledFunction::from_callable(
            Domain::half_line, [](double x) { return std::exp(-3.0 * std::sqrt(x)); }, {Decay::Kind::exp_sqrt, 3.0},
            e.name);
        // int_0^inf e^{-3 sqrt x} x^{s-1} dx = 2 Gamma(2s) / 3^{2s}
        e.mellin = [](cplx s) { return 2.0 * std::exp(log_gamma(2.0 * s) - 2.0 * s * std::log(3.0)); };
        e.hypotheses = "weighted norm int |f| e^{2 sqrt x} dx = 2 (finite)";
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "k0sqrt";
        e.description = "f(x) = 2 K_0(2 sqrt x)";
        e.fn = SampledFunction::from_callable(
            Domain::half_line, [](double x) {
                const double z = 2.0 * std::sqrt(x);
                return z > 700.0 ? 0.0 : 2.0 * std::cyl_bessel_k(0.0, z);
            },
            {Decay::Kind::exp_sqrt, 2.0}, e.name);
        e.mellin = [](cplx s) { return std::exp(2.0 * log_gamma(s)); };
        const double omega = std::log(3.0 + 2.0 * std::sqrt(2.0));
        e.ff = [omega](double tau) { return std::sqrt(pi / 2.0) * std::cos(tau * omega) / std::cosh(pi * tau); };
        e.hypotheses = "f* = Gamma^2 and phi = e^{-x} are explicit; int |f| e^{2 sqrt x} dx diverges; "
                       "Ff is not in L_1(tau e^{pi tau} d tau)";
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "gauss";
        e.description = "g(tau) = exp(-tau^2)";
        e.fn = SampledFunction::from_callable(
            Domain::real_line, [](double t) { return std::exp(-t * t); }, {Decay::Kind::exp, kGaussRate}, e.name);
        e.hypotheses = "L_1 norm sqrt(pi); e^{beta |tau|} integrable for every beta";
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "t2gauss";
        e.description = "g(tau) = tau^2 exp(-tau^2)";
        e.fn = SampledFunction::from_callable(
            Domain::real_line, [](double t) { return t * t * std::exp(-t * t); }, {Decay::Kind::exp, kGaussRate},
            e.name);
        e.hypotheses = "even, entire, g(0) = g'(0) = 0, L_1 norm sqrt(pi)/2; its Gg decays like y^{-1/2} and is "
                       "not in L_1((1, inf))";
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    const std::string key = name.rfind("builtin:", 0) == 0 ? name.substr(8) : name;
    for (const auto& e : catalog())
        if (e.name == key) return e;
    throw SchemaError("unknown builtin function '" + key + "'");
}

} // namespace sqb
