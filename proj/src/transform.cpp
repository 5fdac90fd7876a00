#include "sqb/transform.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace sqb {

namespace {

using std::numbers::pi;
const double kSqrtPi = std::sqrt(pi);
constexpr double kInf = std::numeric_limits<double>::infinity();

// Smallest |tau| at which the bracket is evaluated; below it the even
// function is flat to O(tau^2).
constexpr double kTauFloor = 1e-5;

quad::QuadConfig tightened(const quad::QuadConfig& cfg, double abs_tol, double rel_tol) {
    quad::QuadConfig c = cfg;
    c.abs_tol = std::min(cfg.abs_tol, abs_tol);
    c.rel_tol = std::min(cfg.rel_tol, rel_tol);
    return c;
}

double tau_coth(double tau) {
    const double t = std::abs(tau);
    if (t < 1e-8) return 1.0 / pi;
    return t / std::tanh(pi * t);
}

// h <= 0 selects the default step, shrunk with x below 1 where the
// integrands oscillate like cos(tau ln x).
quad::DiffStencil resolve_step(const quad::DiffStencil& stencil, double x) {
    quad::DiffStencil st = stencil;
    if (!(st.h > 0.0)) st.h = quad::DiffStencil::default_step(st.order, st.accuracy, x) * std::min(1.0, x);
    st.validate();
    return st;
}

void require_half_line(const SampledFunction& f, const char* what) {
    if (f.domain() != Domain::half_line) throw DomainError(std::string(what) + " needs a function on (0, inf)");
}

void require_real_line(const SampledFunction& g, const char* what) {
    if (g.domain() != Domain::real_line) throw DomainError(std::string(what) + " needs a function on the real line");
}

double even_part2(const SampledFunction& g, double tau) { return g(tau) + g(-tau); }

} // namespace

ForwardRoute parse_forward_route(const std::string& s) {
    if (s == "direct") return ForwardRoute::direct;
    if (s == "mb" || s == "mb_kernel") return ForwardRoute::mb_kernel;
    if (s == "parseval") return ForwardRoute::parseval;
    throw DomainError("unknown forward route '" + s + "'");
}

// ---------------------------------------------------------------- forward

double weighted_norm(const SampledFunction& f, const quad::QuadConfig& cfg) {
    require_half_line(f, "weighted_norm");
    if (!f.decay().sqrt_weight_finite()) return kInf;
    // x = u^2
    auto h = [&](double u) { return std::abs(f(u * u)) * std::exp(2.0 * u) * 2.0 * u; };
    try {
        return quad::integrate_panels<double>(h, 0.0, 2.0, cfg, 1.0, 5000).value;
    } catch (const QuadratureError& e) {
        throw NormError(std::string("int |f| e^{2 sqrt x} dx did not converge: ") + e.what());
    }
}

double forward_F_at(const SampledFunction& f, double tau, const quad::QuadConfig& cfg, ForwardRoute route,
                    const std::optional<ComplexFn>& f_star) {
    require_half_line(f, "forward_F");
    if (route == ForwardRoute::parseval) {
        const ComplexFn fs = f_star ? *f_star : ComplexFn([&](cplx s) {
            return mellin_transform(f, s, tightened(cfg, 1e-15, 1e-13));
        });
        quad::ContourSpec spec;
        spec.abscissa = 0.125;
        spec.height = std::abs(tau) + 40.0;
        spec.step_hint = 0.5;
        spec.edge_ratio_limit = 1e-10;
        quad::QuadConfig c = cfg;
        c.abs_tol = 0.0;
        c.rel_tol = std::min(cfg.rel_tol, 1e-12);
        const auto r = quad::integrate_vertical_line(
            [&](cplx s) -> cplx {
                const cplx k = phi_mb_integrand(tau, s);
                if (k == cplx(0.0, 0.0)) return k;
                return k * fs(1.0 - s);
            },
            1.0, spec, c);
        return r.value.real();
    }
    // x = u^2; Phi oscillates like cos(2u) / u.
    auto h = [&](double u) -> double {
        const double x = u * u;
        const double fx = f(x);
        if (fx == 0.0) return 0.0;
        const double k = route == ForwardRoute::direct ? phi_direct(tau, x) : phi_mellin_barnes(tau, x);
        return k * fx * 2.0 * u;
    };
    const double growth = f.decay().kind == Decay::Kind::power ? 1.25 : 1.0;
    return quad::integrate_panels<double>(h, 0.0, 2.0, cfg, growth, 5000).value;
}

ForwardResult forward_F(const SampledFunction& f, const std::vector<double>& tau_grid, const quad::QuadConfig& cfg,
                        ForwardRoute route, const std::optional<ComplexFn>& f_star) {
    ForwardResult out;
    out.tau_grid = tau_grid;
    out.weighted_norm = weighted_norm(f, cfg);
    out.values.reserve(tau_grid.size());
    for (double tau : tau_grid) out.values.push_back(forward_F_at(f, tau, cfg, route, f_star));
    return out;
}

ForwardResult forward_F_via_phi(const SampledFunction& f, const std::vector<double>& tau_grid,
                                const MellinStrip& strip, const quad::QuadConfig& cfg,
                                const std::optional<ComplexFn>& f_star) {
    require_half_line(f, "forward_F_via_phi");
    strip.validate();
    if (!strip.admissible_for_forward())
        throw StripError("forward_F_via_phi needs 0 < nu < 3/4 - 1/(2p), got nu = " + std::to_string(strip.nu));
    const ComplexFn fs = f_star ? *f_star : ComplexFn([&](cplx s) {
        return mellin_transform(f, s, tightened(cfg, 1e-15, 1e-13));
    });
    const ComplexFn quotient = [&](cplx s) { return fs(s) * rgamma(s); };
    const MellinStrip line(1.0 - strip.nu, strip.p);
    quad::QuadConfig inner = tightened(cfg, 1e-15, 1e-13);

    // phi is shared by every tau; adaptive node sets overlap heavily.
    std::map<double, double> cache;
    auto phi_at = [&](double x) {
        auto it = cache.find(x);
        if (it != cache.end()) return it->second;
        const double v = inverse_mellin(quotient, line, x, {}, inner).real();
        cache.emplace(x, v);
        return v;
    };

    ForwardResult out;
    out.tau_grid = tau_grid;
    out.weighted_norm = weighted_norm(f, cfg);
    for (double tau : tau_grid) {
        auto h = [&](double x) -> double {
            const double p = phi_at(x);
            if (p == 0.0) return 0.0;
            return bessel_i_scaled(cplx(0.0, tau), 0.5 * x).real() * p;
        };
        const double integral = quad::integrate_panels<double>(h, 0.0, 4.0, cfg, 1.0, 5000).value;
        out.values.push_back(kSqrtPi * integral / std::cosh(pi * tau));
    }
    return out;
}

// ---------------------------------------------------------------- inverse

double l1_norm(const SampledFunction& g, const quad::QuadConfig& cfg) {
    require_real_line(g, "l1_norm");
    if (g.decay().kind == Decay::Kind::power && g.decay().a <= 1.0)
        throw NormError("g with power tail of order <= 1 is not in L_1");
    auto h = [&](double t) { return std::abs(g(t)) + std::abs(g(-t)); };
    const double growth = g.decay().kind == Decay::Kind::power ? 1.25 : 1.0;
    try {
        return quad::integrate_panels<double>(h, 0.0, 2.0, cfg, growth, 5000).value;
    } catch (const QuadratureError& e) {
        throw NormError(std::string("int |g| did not converge: ") + e.what());
    }
}

double inverse_G_at(const SampledFunction& g, double x, const quad::QuadConfig& cfg) {
    require_real_line(g, "inverse_G");
    if (!(x > 0.0)) throw DomainError("inverse_G: x must be > 0");
    // Phi is even in tau, so only the even part of g contributes.
    auto h = [&](double tau) -> double {
        const double ge = even_part2(g, tau);
        if (ge == 0.0) return 0.0;
        return phi_direct(tau, x) * ge;
    };
    const double growth = g.decay().kind == Decay::Kind::power ? 1.25 : 1.0;
    return quad::integrate_panels<double>(h, 0.0, 2.0, cfg, growth, 5000).value;
}

InverseResult inverse_G(const SampledFunction& g, const std::vector<double>& x_grid, const quad::QuadConfig& cfg) {
    InverseResult out;
    out.x_grid = x_grid;
    out.l1_norm_g = l1_norm(g, cfg);
    out.values.reserve(x_grid.size());
    for (double x : x_grid) out.values.push_back(inverse_G_at(g, x, cfg));
    return out;
}

IdentityReport mellin_identity_check(const SampledFunction& g, const MellinStrip& strip, double y,
                                  const quad::QuadConfig& cfg) {
    require_real_line(g, "mellin_identity_check");
    strip.validate();
    if (!(strip.nu > 0.0 && strip.nu < 0.5)) throw StripError("identity needs 0 < nu < 1/2");
    if (!(y > 0.0)) throw DomainError("mellin_identity_check: y must be > 0");
    const quad::QuadConfig inner = tightened(cfg, 1e-14, 1e-12);

    auto gg_star = [&](cplx s) -> cplx {
        auto h = [&](double tau) -> cplx {
            const double ge = even_part2(g, tau);
            if (ge == 0.0) return {0.0, 0.0};
            return phi_mb_integrand(tau, s) * ge;
        };
        return quad::integrate_panels<cplx>(h, 0.0, 2.0, inner, 1.0, 5000).value;
    };
    auto integrand = [&](cplx s) -> cplx {
        return std::exp(log_gamma(s) + 2.0 * log_gamma(1.0 - s)) * gg_star(s);
    };
    quad::ContourSpec spec;
    spec.abscissa = strip.nu;
    spec.height = 30.0;
    spec.step_hint = 0.5;
    spec.edge_ratio_limit = 1e-10;
    IdentityReport rep;
    rep.lhs = quad::integrate_vertical_line(integrand, y, spec, inner).value.real();

    auto k = [&](double tau) -> double {
        const double ge = even_part2(g, tau);
        if (ge == 0.0) return 0.0;
        return macdonald_k(tau, 0.5 * y, inner) * ge / std::cosh(pi * tau);
    };
    rep.rhs = kSqrtPi * std::exp(0.5 * y) * quad::integrate_panels<double>(k, 0.0, 2.0, inner, 1.0, 5000).value;
    rep.residual = std::abs(rep.lhs - rep.rhs) / std::max(1.0, std::abs(rep.rhs));
    return rep;
}

// ---------------------------------------------------------------- kernels

double eps_deriv_pair(double tau, double x) {
    if (!(x > 0.0)) throw DomainError("eps_deriv_pair: x must be > 0");
    const double z = std::sqrt(x);
    return 2.0 * (bessel_j(cplx(0.0, tau), z) * bessel_j_dnu(cplx(0.0, -tau), z)).real();
}

double bessel_bracket(double x, double tau, double c) {
    if (!(x > 0.0)) throw DomainError("bessel_bracket: x must be > 0");
    const double t = std::max(std::abs(tau), kTauFloor);
    const cplx j = bessel_j(cplx(0.0, t), std::sqrt(x));
    return (j * j).imag() / std::sinh(pi * t) - c * eps_deriv_pair(t, x);
}

double kernel_K_quadrature(double x, double tau, const quad::QuadConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("kernel_K_quadrature: x must be > 0");
    const quad::QuadConfig inner = tightened(cfg, 1e-14, 1e-12);
    // y = v^2
    auto h = [&](double v) -> double {
        const double d = x + v * v;
        const double k = macdonald_k(tau, v, inner);
        return k * k * 2.0 * v / (d * d);
    };
    return -quad::integrate_semi_infinite<double>(h, tightened(cfg, 1e-13, 1e-11)).value;
}

double kernel_K_closed(double x, double tau) {
    if (!(x > 0.0)) throw DomainError("kernel_K_closed: x must be > 0");
    const double t = std::max(std::abs(tau), kTauFloor);
    const double d = quad::differentiate([&](double xx) { return bessel_bracket(xx, t, 1.0 / pi); }, x,
                                         resolve_step({1, 0.0, 4}, x), 0.0);
    const double sh = std::sinh(pi * t);
    return pi * pi * pi / (2.0 * sh * sh) * d;
}

double macdonald_bessel_i_integral(double x, double z, const quad::QuadConfig& cfg) {
    if (!(z > 0.0)) throw DomainError("macdonald_bessel_i_integral needs z > 0");
    const quad::QuadConfig inner = tightened(cfg, 1e-15, 1e-13);
    // y = e^v: the integrand decays like y^z at the origin and like 1/(2y) at infinity.
    auto h = [&](double v) -> double {
        const double y = std::exp(v);
        if (y == 0.0 || !std::isfinite(y)) return 0.0;
        return macdonald_k_scaled(x, y, inner) * bessel_i_scaled(cplx(z, 0.0), y).real();
    };
    const quad::QuadConfig outer = tightened(cfg, 1e-13, 1e-11);
    return quad::integrate_semi_infinite<double>(h, outer, 0.0).value +
           quad::integrate_semi_infinite<double>([&](double w) { return h(-w); }, outer, 0.0).value;
}

// ---------------------------------------------------------------- inversion of F

InvertFResult invert_F(const SampledFunction& ff, const std::vector<double>& x_grid,
                            const quad::QuadConfig& cfg, const quad::DiffStencil& stencil,
                            const InvertFOptions& opt) {
    if (opt.regularization < 0.0) throw DomainError("regularization width must be >= 0");
    const bool regularized = opt.regularization > 0.0;
    const Decay& d = ff.decay();
    const bool integrable = d.kind == Decay::Kind::exp && d.a > pi;
    if (!integrable && !regularized) {
        throw IntegrabilityError("Ff with tail " + d.describe() +
                                 " is not in L_1(tau e^{pi tau} d tau); the tau integral does not converge");
    }

    InvertFResult out;
    out.x_grid = x_grid;
    out.regularized = regularized;
    out.tau_max = regularized ? (opt.tau_max > 0.0 ? opt.tau_max : 6.0 * opt.regularization) : opt.tau_max;
    // A sampled Ff is only C^1 at its knots, which caps the attainable accuracy.
    const quad::QuadConfig inner = ff.is_sampled() ? tightened(cfg, 1e-11, 1e-10) : tightened(cfg, 1e-13, 1e-12);

    auto tau_integral = [&](double x) -> double {
        auto h = [&](double tau) -> double {
            const double v = ff(tau);
            if (v == 0.0) return 0.0;
            double w = 1.0;
            if (regularized) {
                const double r = tau / opt.regularization;
                w = std::exp(-r * r);
            }
            return tau_coth(tau) * bessel_bracket(x, tau, 1.0 / pi) * v * w;
        };
        if (out.tau_max > 0.0) {
            const int pieces = std::max(4, static_cast<int>(std::ceil(4.0 * out.tau_max)));
            return quad::integrate<double>(h, 0.0, out.tau_max, inner, pieces).value;
        }
        return quad::integrate_panels<double>(h, 0.0, 2.0, inner, 1.0, 5000).value;
    };

    out.values.reserve(x_grid.size());
    for (double x : x_grid) {
        if (!(x > 0.0)) throw DomainError("invert_F: x must be > 0");
        out.values.push_back(2.0 * kSqrtPi * quad::differentiate(tau_integral, x, resolve_step(stencil, x), 0.0));
    }
    return out;
}

// ---------------------------------------------------------------- inversion of G

double theta_kernel(double x, double y, ThetaRoute route, const quad::QuadConfig& cfg) {
    if (x == 0.0 || !std::isfinite(x)) throw DomainError("theta_kernel: x must be nonzero and finite");
    if (!(y > 0.0)) throw DomainError("theta_kernel: y must be > 0");
    const double ax = std::abs(x);
    const double head = kSqrtPi / (ax * std::sinh(pi * ax));
    switch (route) {
    case ThetaRoute::integral: {
        const quad::QuadConfig inner = tightened(cfg, 1e-14, 1e-12);
        auto h = [&](double t) -> double {
            const double k = macdonald_k(ax, std::sqrt(y * t), inner);
            return k * k / ((1.0 + t) * (1.0 + t));
        };
        return head - 2.0 / kSqrtPi * quad::integrate_semi_infinite<double>(h, tightened(cfg, 1e-13, 1e-11)).value;
    }
    case ThetaRoute::printed: return head + 2.0 * y * kernel_K_closed(y, ax);
    case ThetaRoute::corrected: return head + 2.0 / kSqrtPi * y * kernel_K_closed(y, ax);
    }
    return 0.0;
}

InvertGResult invert_G(const SampledFunction& gg, const std::vector<double>& x_grid, const quad::QuadConfig& cfg,
                       const quad::DiffStencil& stencil, InvertGForm form) {
    require_half_line(gg, "invert_G");
    // Gg is itself the output of a quadrature or of C^1 interpolation, so the
    // integrals here take the accuracy they can get.
    quad::QuadConfig inner = tightened(cfg, 1e-12, 1e-10);
    inner.strict = false;
    // A sampled Gg is not extrapolated towards the origin, where Gg(y) ~ sqrt(y).
    const double u0 = std::sqrt(gg.lo());
    const double split = std::max(8.0, 2.0 * u0);
    InvertGResult out;
    out.x_grid = x_grid;
    for (double x : x_grid) {
        const double ax = std::max(std::abs(x), kTauFloor);
        const double head = std::cosh(pi * ax) / (pi * kSqrtPi);
        const bool printed = form == InvertGForm::printed;
        const double cx = (printed ? pi : kSqrtPi) * tau_coth(ax);
        const double c_eps = printed ? 1.0 / kSqrtPi : 1.0 / pi;
        auto dbracket = [&](double y) {
            return quad::differentiate([&](double yy) { return bessel_bracket(yy, ax, c_eps); }, y,
                                       resolve_step(stencil, y), 0.0);
        };
        // y = u^2, dy / y = 2 du / u
        auto h = [&](double u) -> double {
            const double y = u * u;
            const double v = gg(y);
            if (v == 0.0) return 0.0;
            return 2.0 * v * (head + cx * y * dbracket(y)) / u;
        };
        const double near = quad::integrate<double>(h, u0, split, inner, 32).value;
        const double far = quad::integrate_oscillatory<double>(h, split, pi / 2, inner, 12, 2000).value;
        out.values.push_back(near + far);
    }
    return out;
}

} // namespace sqb
