#include "sqb/pde.hpp"

#include <algorithm>
#include <cmath>

#include "sqb/errors.hpp"
#include "sqb/kernel.hpp"
#include "sqb/transform.hpp"

namespace sqb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

quad::QuadConfig tight(const quad::QuadConfig& cfg) {
    quad::QuadConfig c = cfg;
    c.abs_tol = std::min(cfg.abs_tol, 1e-14);
    c.rel_tol = std::min(cfg.rel_tol, 1e-13);
    return c;
}

void check_point(double r, double theta, const WedgeSpec& wedge) {
    if (!(r > 0.0)) throw DomainError("u(r, theta) needs r > 0");
    if (!wedge.contains_angle(theta))
        throw DomainError("theta = " + std::to_string(theta) + " outside [0, " + std::to_string(wedge.beta) + ")");
}

double u_integral(const SampledFunction& g, double r, double theta, int k, const quad::QuadConfig& cfg) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    auto h = [&](double tau) -> double {
        const double w = std::exp(theta * tau) * g(tau) + sign * std::exp(-theta * tau) * g(-tau);
        if (w == 0.0) return 0.0;
        return phi_direct(tau, r) * std::pow(tau, k) * w;
    };
    return quad::integrate_panels<double>(h, 0.0, 2.0, tight(cfg), 1.0, 5000).value;
}

double r_step(int order, int accuracy, double r) {
    return quad::DiffStencil::default_step(order, accuracy, 1.0) * std::min(1.0, r) * std::max(1.0, r);
}

} // namespace

void WedgeSpec::validate() const {
    if (!(beta > 0.0 && beta <= kTwoPi - kGuard))
        throw DomainError("wedge opening beta must lie in (0, 2 pi - " + std::to_string(kGuard) + "]");
    if (!(r_min > 0.0 && r_max > r_min)) throw DomainError("wedge needs 0 < r_min < r_max");
    for (double t : theta_grid)
        if (!contains_angle(t)) throw DomainError("theta grid point " + std::to_string(t) + " outside [0, beta)");
}

void check_wedge_integrability(const SampledFunction& g, const WedgeSpec& wedge, const quad::QuadConfig& cfg) {
    if (g.domain() != Domain::real_line) throw DomainError("u(r, theta) needs g on the real line");
    const Decay& d = g.decay();
    if (!(d.kind == Decay::Kind::exp && d.a > wedge.beta)) {
        throw IntegrabilityError("g with tail " + d.describe() + " is not in L_1(e^{beta |tau|} d tau) for beta = " +
                                 std::to_string(wedge.beta));
    }
    auto h = [&](double t) { return (std::abs(g(t)) + std::abs(g(-t))) * std::exp(wedge.beta * t); };
    try {
        quad::integrate_panels<double>(h, 0.0, 2.0, cfg, 1.0, 5000);
    } catch (const QuadratureError& e) {
        throw IntegrabilityError(std::string("int |g| e^{beta |tau|} d tau did not converge: ") + e.what());
    }
}

double evaluate_u(const SampledFunction& g, double r, double theta, const WedgeSpec& wedge,
                  const quad::QuadConfig& cfg) {
    return evaluate_u_dtheta(g, r, theta, 0, wedge, cfg);
}

double evaluate_u_dtheta(const SampledFunction& g, double r, double theta, int k, const WedgeSpec& wedge,
                         const quad::QuadConfig& cfg) {
    wedge.validate();
    check_point(r, theta, wedge);
    check_wedge_integrability(g, wedge, cfg);
    if (k < 0) throw DomainError("derivative order must be >= 0");
    return u_integral(g, r, theta, k, cfg);
}

PdeResidual pde_residual_polar(const SampledFunction& g, double r, double theta, const WedgeSpec& wedge,
                               PdeForm form, const quad::DiffStencil& stencil, const quad::QuadConfig& cfg) {
    wedge.validate();
    check_point(r, theta, wedge);
    check_wedge_integrability(g, wedge, cfg);
    auto u0 = [&](double rr) { return u_integral(g, rr, theta, 0, cfg); };
    auto u2 = [&](double rr) { return u_integral(g, rr, theta, 2, cfg); };
    auto d = [&](auto& f, int order) {
        quad::DiffStencil st{order, stencil.h, stencil.accuracy};
        if (!(st.h > 0.0) || order != stencil.order) st.h = r_step(order, stencil.accuracy, r);
        return quad::differentiate(f, r, st, 0.0);
    };
    const double ur = d(u0, 1), urr = d(u0, 2), urrr = d(u0, 3);
    const double urthth = d(u2, 1);
    const double c = form == PdeForm::printed ? 1.0 - 7.0 / r : 1.0 + 1.0 / r;
    PdeResidual out;
    out.terms = {r * urrr, urthth / r, 3.0 * urr, c * ur, u0(r) / (2.0 * r)};
    out.scale = 0.0;
    for (double t : out.terms) {
        out.residual += t;
        out.scale = std::max(out.scale, std::abs(t));
    }
    if (out.scale == 0.0) out.scale = 1.0;
    return out;
}

PdeResidual pde_residual_cartesian(const SampledFunction& g, double x, double y, const WedgeSpec& wedge,
                                   PdeForm form, double h, const quad::QuadConfig& cfg) {
    wedge.validate();
    if (!(h > 0.0)) throw DomainError("Cartesian stencil step must be > 0");
    check_wedge_integrability(g, wedge, cfg);
    auto u = [&](double xx, double yy) {
        const double r = std::hypot(xx, yy);
        double theta = std::atan2(yy, xx);
        if (theta < 0.0) theta += kTwoPi;
        check_point(r, theta, wedge);
        return u_integral(g, r, theta, 0, cfg);
    };
    const auto w1 = quad::stencil_weights(1, 4);
    const auto w2 = quad::stencil_weights(2, 4);
    const int half = static_cast<int>(w1.size()) / 2;
    auto lap = [&](double xx, double yy) {
        double s = 0.0;
        for (int i = -half; i <= half; ++i) {
            const double w = w2[static_cast<std::size_t>(i + half)];
            if (w == 0.0) continue;
            s += w * (u(xx + i * h, yy) + u(xx, yy + i * h));
        }
        return s / (h * h);
    };
    double lx = 0.0, ly = 0.0, ux = 0.0, uy = 0.0;
    for (int i = -half; i <= half; ++i) {
        const double w = w1[static_cast<std::size_t>(i + half)];
        if (w == 0.0) continue;
        lx += w * lap(x + i * h, y);
        ly += w * lap(x, y + i * h);
        ux += w * u(x + i * h, y);
        uy += w * u(x, y + i * h);
    }
    lx /= h;
    ly /= h;
    ux /= h;
    uy /= h;
    const double r = std::hypot(x, y);
    const double c = form == PdeForm::printed ? r - 8.0 : r;
    PdeResidual out;
    const double l0 = lap(x, y);
    out.terms = {x * lx + y * ly, 2.0 * l0, c / (r * r) * (x * ux + y * uy), u(x, y) / (2.0 * r), 0.0};
    out.scale = 0.0;
    for (double t : out.terms) {
        out.residual += t;
        out.scale = std::max(out.scale, std::abs(t));
    }
    if (out.scale == 0.0) out.scale = 1.0;
    return out;
}

double ivp_check(const SampledFunction& g, const WedgeSpec& wedge, const std::vector<double>& x_grid,
                 const quad::QuadConfig& cfg) {
    double worst = 0.0;
    for (double r : x_grid) {
        const double u = evaluate_u(g, r, 0.0, wedge, cfg);
        const double gg = inverse_G_at(g, r, cfg);
        worst = std::max(worst, std::abs(u - gg));
    }
    return worst;
}

} // namespace sqb
