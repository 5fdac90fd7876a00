#include "sqb/kernel.hpp"

#include <cmath>
#include <numbers>

namespace sqb {

namespace {

using std::numbers::pi;
const double kSqrtPi = std::sqrt(pi);

} // namespace

KernelMethod parse_kernel_method(const std::string& s) {
    if (s == "direct") return KernelMethod::direct;
    if (s == "mb" || s == "mellin_barnes") return KernelMethod::mellin_barnes;
    if (s == "cosine" || s == "cosine_rep") return KernelMethod::cosine_rep;
    throw DomainError("unknown kernel method '" + s + "'");
}

quad::ContourSpec default_kernel_contour() {
    quad::ContourSpec c;
    c.abscissa = 0.125;
    c.height = 60.0;
    c.step_hint = 0.25;
    c.tail = quad::ContourTail::bend_left;
    return c;
}

double phi_direct(double tau, double x) {
    if (!(x > 0.0)) throw DomainError("phi_direct: x must be > 0");
    const cplx j = bessel_j(cplx(0.0, tau), std::sqrt(x));
    return kSqrtPi * (j * j).real() / std::cosh(pi * tau);
}

cplx phi_mb_integrand(double tau, cplx s) {
    const cplx I(0.0, 1.0);
    const cplx lg = log_gamma(s + I * tau) + log_gamma(s - I * tau) + log_gamma(0.5 - s) - log_gamma(s) -
                    2.0 * log_gamma(1.0 - s);
    if (lg.real() < -745.0) return {0.0, 0.0};
    return std::exp(lg);
}

double phi_mellin_barnes(double tau, double x, const quad::ContourSpec& spec, const quad::QuadConfig& qc) {
    if (!(x > 0.0)) throw DomainError("phi_mellin_barnes: x must be > 0");
    if (!(spec.abscissa > 0.0 && spec.abscissa < 0.25))
        throw ContourError("Mellin-Barnes abscissa must lie in (0, 1/4), got " + std::to_string(spec.abscissa));
    quad::ContourSpec c = spec;
    if (c.tail == quad::ContourTail::bend_left) c.height = std::max(c.height, std::abs(tau) + 2.0);
    quad::QuadConfig cfg = qc;
    cfg.abs_tol = std::min(qc.abs_tol, 1e-12);
    cfg.rel_tol = std::min(qc.rel_tol, 1e-12);
    const auto r = quad::integrate_vertical_line([&](cplx s) { return phi_mb_integrand(tau, s); }, x, c, cfg);
    if (std::abs(r.value.imag()) > 1e-9 * std::max(1.0, std::abs(r.value.real())))
        throw QuadratureError("Mellin-Barnes kernel has imaginary residue " + std::to_string(r.value.imag()));
    return r.value.real();
}

double cosine_rep_integral(double tau, double x, const quad::QuadConfig& qc) {
    if (!(x > 0.0)) throw DomainError("cosine_rep_integral: x must be > 0");
    const double rx = std::sqrt(x);
    quad::QuadConfig cfg = qc;
    cfg.abs_tol = std::min(qc.abs_tol, 1e-15);
    cfg.rel_tol = std::min(qc.rel_tol, 1e-14);
    const double sw = kStruveSwitch;

    // Below w = sw the Struve series is used directly; above it L_1(2iw) is split
    // into -Y_1(2w), which oscillates, and a smooth remainder.
    const double u_switch = rx < sw ? 2.0 * std::acosh(sw / rx) : 0.0;
    const double w_osc = std::max(sw, 2.0 * rx);
    const double u_osc = 2.0 * std::acosh(w_osc / rx);

    double total = 0.0;
    if (u_switch > 0.0) {
        auto f = [&](double u) {
            const double c = std::cosh(0.5 * u);
            return std::cos(tau * u) / c * struve_l1_imag(rx * c);
        };
        const int pieces = std::max(4, static_cast<int>(std::ceil(u_switch * (1.0 + std::abs(tau)))));
        total += quad::integrate<double>(f, 0.0, u_switch, cfg, pieces).value;
    }
    auto smooth = [&](double u) {
        const double c = std::cosh(0.5 * u);
        if (!std::isfinite(c)) return 0.0;
        return -std::cos(tau * u) / c * struve_smooth(rx * c);
    };
    quad::QuadConfig tail_cfg = cfg;
    tail_cfg.tail_cutoff = 1e-18;
    total += quad::integrate_panels<double>(smooth, u_switch, 4.0, tail_cfg).value;

    // -Y_1 part: first in u up to w = w_osc, then in w with half-period panels.
    auto y_u = [&](double u) {
        const double c = std::cosh(0.5 * u);
        return -std::cos(tau * u) / c * std::cyl_neumann(1.0, 2.0 * rx * c);
    };
    if (u_osc > u_switch) {
        const int pieces = std::max(4, static_cast<int>(std::ceil((u_osc - u_switch) * (2.0 + std::abs(tau)))));
        total += quad::integrate<double>(y_u, u_switch, u_osc, cfg, pieces).value;
    }
    // u = 2 acosh(w / rx), du = 2 dw / sqrt(w^2 - x), sech(u/2) = rx / w
    auto y_w = [&](double w) {
        const double u = 2.0 * std::acosh(w / rx);
        return -std::cos(tau * u) * (rx / w) * std::cyl_neumann(1.0, 2.0 * w) * 2.0 / std::sqrt(w * w - x);
    };
    quad::QuadConfig osc_cfg = cfg;
    osc_cfg.abs_tol = 1e-15;
    osc_cfg.rel_tol = 1e-13;
    total += quad::integrate_oscillatory<double>(y_w, w_osc, pi / 2, osc_cfg, 12, 2000).value;
    return rx * total;
}

double phi_cosine_rep(double tau, double x, const quad::QuadConfig& qc, const quad::DiffStencil& stencil) {
    quad::DiffStencil st = stencil;
    if (!(st.h > 0.0)) st.h = quad::DiffStencil::default_step(st.order, st.accuracy, x);
    const double d = quad::differentiate([&](double xx) { return cosine_rep_integral(tau, xx, qc); }, x, st, 0.0);
    return -d / kSqrtPi;
}

double phi(const KernelPoint& p) {
    switch (p.method) {
    case KernelMethod::direct: return phi_direct(p.tau, p.x);
    case KernelMethod::mellin_barnes: return phi_mellin_barnes(p.tau, p.x);
    case KernelMethod::cosine_rep: return phi_cosine_rep(p.tau, p.x);
    }
    return 0.0;
}

OdeResidual ode_residual(double tau, double x, const quad::DiffStencil& stencil, OdeForm form) {
    if (!(x > 0.0)) throw DomainError("ode_residual: x must be > 0");
    auto f = [&](double xx) { return phi_direct(tau, xx); };
    auto deriv = [&](int order) {
        quad::DiffStencil st{order, stencil.h, stencil.accuracy};
        // Phi oscillates like cos(tau ln x) near the origin, so the step follows
        // x itself below 1 rather than max(1, x).
        if (!(st.h > 0.0) || order != stencil.order)
            st.h = quad::DiffStencil::default_step(order, stencil.accuracy, 1.0) * std::min(1.0, x) *
                   std::max(1.0, x);
        return quad::differentiate(f, x, st, 0.0);
    };
    const double d1 = deriv(1), d2 = deriv(2), d3 = deriv(3);
    const double c = form == OdeForm::printed ? tau * tau + x - 7.0 : tau * tau + x + 1.0;
    OdeResidual r;
    r.residual = x * x * d3 + 3.0 * x * d2 + c * d1 + 0.5 * f(x);
    r.scale = std::max(1.0, x * x * std::abs(d3));
    return r;
}

} // namespace sqb
