#include "sqb/mellin.hpp"

#include <cmath>
#include <numbers>

namespace sqb {

namespace {

using std::numbers::pi;

double log_cosh(double u) {
    const double a = std::abs(u);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

} // namespace

MellinStrip::MellinStrip(double nu_, double p_) : nu(nu_), p(p_), q(p_ / (p_ - 1.0)) { validate(); }

void MellinStrip::validate() const {
    if (!std::isfinite(nu)) throw StripError("strip abscissa must be finite");
    if (!(p > 1.0 && p <= 2.0)) throw StripError("strip exponent p must lie in (1, 2]");
}

bool MellinStrip::admissible_for_forward() const { return nu > 0.0 && nu < 0.75 - 0.5 / p; }

cplx mellin_transform(const SampledFunction& f, cplx s, const quad::QuadConfig& cfg) {
    if (f.domain() != Domain::half_line) throw StripError("Mellin transform needs a half-line function");
    if (!(s.real() > f.strip_lo() && s.real() < f.strip_hi())) {
        throw StripError("Re s = " + std::to_string(s.real()) + " outside the convergence strip (" +
                         std::to_string(f.strip_lo()) + ", " + std::to_string(f.strip_hi()) + ")");
    }
    // x = e^t splits the half line at x = 1 into two semi-infinite pieces.
    auto right = [&](double t) -> cplx {
        const double x = std::exp(t);
        if (!std::isfinite(x)) return {0.0, 0.0};
        const double v = f(x);
        if (v == 0.0) return {0.0, 0.0};
        return v * std::exp(s * t);
    };
    auto left = [&](double t) -> cplx {
        const double x = std::exp(-t);
        if (x == 0.0) return {0.0, 0.0};
        const double v = f(x);
        if (v == 0.0) return {0.0, 0.0};
        return v * std::exp(-s * t);
    };
    const auto r = quad::integrate_semi_infinite<cplx>(right, cfg);
    const auto l = quad::integrate_semi_infinite<cplx>(left, cfg);
    return r.value + l.value;
}

cplx inverse_mellin(const ComplexFn& F, const MellinStrip& strip, double x, const quad::ContourSpec& spec,
                    const quad::QuadConfig& cfg) {
    strip.validate();
    quad::ContourSpec c = spec;
    c.abscissa = strip.nu;
    return quad::integrate_vertical_line(F, x, c, cfg).value;
}

ParsevalReport parseval_check(const SampledFunction& f, const SampledFunction& g, const MellinStrip& strip,
                              const quad::QuadConfig& cfg, std::optional<ComplexFn> f_star,
                              std::optional<ComplexFn> g_star) {
    strip.validate();
    ParsevalReport rep;
    auto prod = [&](double x) { return f(x) * g(x); };
    // Split at x = 1 so kinks of common test functions sit on a panel edge.
    rep.lhs = quad::integrate<double>(prod, 0.0, 1.0, cfg).value +
              quad::integrate_semi_infinite<double>(prod, cfg, 1.0).value;

    quad::QuadConfig inner = cfg;
    inner.abs_tol = std::min(cfg.abs_tol, 1e-14);
    inner.rel_tol = std::min(cfg.rel_tol, 1e-13);
    const ComplexFn fs = f_star ? *f_star : ComplexFn([&](cplx s) { return mellin_transform(f, s, inner); });
    const ComplexFn gs = g_star ? *g_star : ComplexFn([&](cplx s) { return mellin_transform(g, s, inner); });
    auto integrand = [&](cplx s) -> cplx { return fs(s) * gs(1.0 - s); };
    quad::ContourSpec spec;
    spec.abscissa = strip.nu;
    spec.height = 40.0;
    spec.step_hint = 1.0;
    spec.edge_ratio_limit = 1e-10;
    rep.rhs = quad::integrate_vertical_line(integrand, 1.0, spec, cfg).value;
    rep.residual = std::abs(rep.rhs - rep.lhs);
    return rep;
}

double gamma_cosine_pair_check(cplx s, double tau, const quad::QuadConfig& cfg) {
    if (!(s.real() > 0.0)) throw StripError("gamma cosine pair needs Re s > 0");
    const cplx I(0.0, 1.0);
    const cplx lhs = std::exp(log_gamma(s + I * tau) + log_gamma(s - I * tau));
    auto f = [&](double y) -> cplx { return std::cos(tau * y) * std::exp(-2.0 * s * log_cosh(0.5 * y)); };
    quad::QuadConfig c = cfg;
    c.abs_tol = std::min(cfg.abs_tol, 1e-13);
    const cplx integral = quad::integrate_semi_infinite<cplx>(f, c).value;
    const cplx rhs = std::exp(log_gamma(2.0 * s) - (2.0 * s - 1.0) * std::numbers::ln2) * integral;
    return std::abs(lhs - rhs);
}

cplx gamma_product_cosine_integral(cplx s, double y, const quad::QuadConfig& cfg) {
    if (!(s.real() > 0.0)) throw StripError("gamma product integral needs Re s > 0");
    const cplx I(0.0, 1.0);
    auto f = [&](double t) -> cplx {
        return std::exp(log_gamma(s + I * t) + log_gamma(s - I * t)) * std::cos(t * y);
    };
    return quad::integrate_semi_infinite<cplx>(f, cfg).value;
}

cplx gamma_product_cosine_closed(cplx s, double y) {
    return pi * std::exp(log_gamma(2.0 * s) - 2.0 * s * std::numbers::ln2 - 2.0 * s * log_cosh(0.5 * y));
}

} // namespace sqb
