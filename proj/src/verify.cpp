#include "sqb/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "sqb/catalog.hpp"
#include "sqb/parallel.hpp"
#include "sqb/transform.hpp"

namespace sqb {

namespace {

using std::numbers::pi;
const double kSqrtPi = std::sqrt(pi);

const std::vector<double> kTauGrid = {0.0, 0.5, 1.0, 2.0, 4.0};
const std::vector<double> kXGrid = {0.1, 1.0, 5.0, 20.0};

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return v;
}

std::vector<double> logspace(double a, double b, int n) {
    auto v = linspace(std::log(a), std::log(b), n);
    for (auto& x : v) x = std::exp(x);
    return v;
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

struct GridPoint {
    double tau, x;
};

std::vector<GridPoint> kernel_grid() {
    std::vector<GridPoint> pts;
    for (double t : kTauGrid)
        for (double x : kXGrid) pts.push_back({t, x});
    return pts;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"lemma1",   "lemma2",      "bounds",      "theorem1",
                                                   "theorem3", "roundtrip-f", "roundtrip-g", "pde"};
    return names;
}

std::vector<CriterionReport> run_suite(const std::string& suite, const VerifyOptions& opt) {
    if (suite == "lemma1") return {check_kernel_agreement(opt)};
    if (suite == "lemma2") return {check_ode(opt)};
    if (suite == "bounds") return {check_bounds(opt)};
    if (suite == "theorem1") return {check_gamma_cosine(opt), check_forward_routes(opt), check_ki_integral(opt)};
    if (suite == "theorem3") return {check_mellin_identity(opt)};
    if (suite == "roundtrip-f") return {check_roundtrip_f(opt)};
    if (suite == "roundtrip-g") return {check_roundtrip_g(opt)};
    if (suite == "pde") return {check_pde(opt)};
    throw DomainError("unknown suite '" + suite + "'");
}

std::string format_report_line(const CriterionReport& r) {
    char buf[320];
    std::snprintf(buf, sizeof buf, "%s  [%2d] %-44s measured %.3e  tol %.1e  (%.1f s)", r.passed ? "PASS" : "FAIL", r.id,
                  r.title.c_str(), r.measured, r.tolerance, r.seconds);
    return buf;
}

CriterionReport check_kernel_agreement(const VerifyOptions& opt) {
    Timer timer;
    CriterionReport r;
    r.id = 1;
    r.title = "kernel: direct vs Mellin-Barnes vs cosine";
    r.tolerance = 1e-8;
    const auto pts = kernel_grid();
    struct Dev {
        double mb, cos;
    };
    const auto devs = parallel_map<Dev>(pts.size(), opt.threads, [&](std::size_t i) {
        const double d = phi_direct(pts[i].tau, pts[i].x);
        const double m = phi_mellin_barnes(pts[i].tau, pts[i].x);
        const double c = phi_cosine_rep(pts[i].tau, pts[i].x);
        return Dev{std::abs(d - m) / (1.0 + std::abs(d)), std::abs(d - c) / (1.0 + std::abs(d))};
    });
    double mb = 0.0, cs = 0.0;
    for (const auto& d : devs) {
        mb = std::max(mb, d.mb);
        cs = std::max(cs, d.cos);
    }
    r.measured = mb;
    r.passed = mb <= 1e-8 && cs <= 1e-5;
    r.notes.push_back(fmt("max |direct - mb| / (1 + |Phi|) = %.3e (tol 1e-8)", mb));
    r.notes.push_back(fmt("max |direct - cosine| / (1 + |Phi|) = %.3e (tol 1e-5)", cs));
    r.seconds = timer.seconds();
    return r;
}

CriterionReport check_ode(const VerifyOptions& opt) {
    Timer timer;
    CriterionReport r;
    r.id = 2;
    r.title = std::string("third-order ODE for Phi (") + (opt.ode_form == OdeForm::printed ? "printed" : "corrected") +
              ")";
    r.tolerance = 1e-6;
    const auto pts = kernel_grid();
    struct Res {
        double chosen, other;
    };
    const OdeForm other = opt.ode_form == OdeForm::printed ? OdeForm::corrected : OdeForm::printed;
    const auto res = parallel_map<Res>(pts.size(), opt.threads, [&](std::size_t i) {
        return Res{ode_residual(pts[i].tau, pts[i].x, {3, 0.0, 4}, opt.ode_form).normalized(),
                   ode_residual(pts[i].tau, pts[i].x, {3, 0.0, 4}, other).normalized()};
    });
    double worst = 0.0, worst_other = 0.0;
    for (const auto& v : res) {
        worst = std::max(worst, v.chosen);
        worst_other = std::max(worst_other, v.other);
    }
    r.measured = worst;
    r.passed = worst <= r.tolerance;
    r.notes.push_back(fmt("coefficient of Phi' used: tau^2 + x %+g", opt.ode_form == OdeForm::printed ? -7.0 : 1.0));
    r.notes.push_back(fmt("with coefficient tau^2 + x %+g instead: max residual %.3e",
                          other == OdeForm::printed ? -7.0 : 1.0, worst_other));
    r.seconds = timer.seconds();
    return r;
}

CriterionReport check_bounds(const VerifyOptions& opt) {
    Timer timer;
    CriterionReport r;
    r.id = 3;
    r.title = "bounds on J, Phi, K and the transform norms";
    r.tolerance = 0.0;
    constexpr double slack = 1.0 + 1e-12;
    int total = 0;

    auto sweep = [&](const char* name, const std::vector<double>& as, const std::vector<double>& bs, auto&& ratio) {
        std::vector<GridPoint> pts;
        for (double a : as)
            for (double b : bs) pts.push_back({a, b});
        const auto ratios =
            parallel_map<double>(pts.size(), opt.threads, [&](std::size_t i) { return ratio(pts[i].tau, pts[i].x); });
        int bad = 0;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < ratios.size(); ++i) {
            if (ratios[i] > ratios[arg]) arg = i;
            if (!(ratios[i] <= slack)) ++bad;
        }
        total += bad;
        r.notes.push_back(std::string(name) + fmt(": %d points, %d violations, max lhs/rhs %.4f at (tau, x) = (%.4g, %.4g)",
                                                  static_cast<int>(pts.size()), bad, ratios[arg], pts[arg].tau,
                                                  pts[arg].x));
    };

    // |J_{i tau}(x)| <= e^x sqrt(sinh(pi tau) / (pi tau))
    sweep("|J_{i tau}(x)| <= e^x sqrt(sinh(pi tau) / (pi tau))", linspace(0.1, 5.0, 40), logspace(0.01, 10.0, 40), [](double tau, double x) {
        return std::abs(bessel_j(cplx(0.0, tau), x)) / (std::exp(x) * std::sqrt(std::sinh(pi * tau) / (pi * tau)));
    });
    // |Re J_{i tau}(sqrt x)^2| / cosh(pi tau) <= 1
    sweep("|Re J_{i tau}(sqrt x)^2| <= cosh(pi tau)", linspace(0.0, 5.0, 26), logspace(0.01, 100.0, 41),
          [](double tau, double x) { return std::abs(phi_direct(tau, x)) / kSqrtPi; });
    // |K_{i tau}(x)| <= x^{-1/4} / sqrt(sinh(pi tau))
    sweep("|K_{i tau}(x)| <= x^{-1/4} / sqrt(sinh(pi tau))", linspace(0.25, 5.0, 20), logspace(0.1, 50.0, 30), [](double tau, double x) {
        return std::abs(macdonald_k(tau, x)) / (std::pow(x, -0.25) / std::sqrt(std::sinh(pi * tau)));
    });

    // sup |Ff| <= sqrt(pi) int |f| e^{2 sqrt x} dx
    for (const char* name : {"exp3sqrt", "k0sqrt"}) {
        const auto& e = catalog_entry(name);
        const auto taus = linspace(0.0, 5.0, 21);
        const double norm = weighted_norm(e.fn);
        const auto vals =
            parallel_map<double>(taus.size(), opt.threads, [&](std::size_t i) { return forward_F_at(e.fn, taus[i]); });
        double sup = 0.0;
        for (double v : vals) sup = std::max(sup, std::abs(v));
        const bool ok = sup <= kSqrtPi * norm * slack;
        if (!ok) ++total;
        r.notes.push_back(std::string("sup |Ff| <= sqrt(pi) int |f| e^{2 sqrt x} dx, ") + name +
                          fmt(": sup |Ff| = %.6f, sqrt(pi) * norm = %.6f", sup, kSqrtPi * norm) +
                          (std::isinf(norm) ? " (weighted norm diverges; bound is vacuous)" : ""));
    }
    // sup |Gg| <= sqrt(pi) ||g||_1
    for (const char* name : {"gauss", "t2gauss"}) {
        const auto& e = catalog_entry(name);
        const auto xs = logspace(0.01, 100.0, 30);
        const auto res = inverse_G(e.fn, xs);
        double sup = 0.0;
        for (double v : res.values) sup = std::max(sup, std::abs(v));
        const bool ok = sup <= kSqrtPi * res.l1_norm_g * slack;
        if (!ok) ++total;
        r.notes.push_back(std::string("sup |Gg| <= sqrt(pi) ||g||_1, ") + name +
                          fmt(": sup |Gg| = %.6f, sqrt(pi) ||g||_1 = %.6f", sup, kSqrtPi * res.l1_norm_g));
    }
    r.measured = total;
    r.passed = total == 0;
    r.seconds = timer.seconds();
    return r;
}

CriterionReport check_gamma_cosine(const VerifyOptions&) {
    Timer timer;
    CriterionReport r;
    r.id = 4;
    r.title = "gamma-product cosine pair";
    r.tolerance = 1e-9;
    quad::QuadConfig qc;
    qc.abs_tol = 1e-13;
    qc.rel_tol = 1e-13;
    double pair = 0.0, swapped = 0.0;
    for (cplx s : {cplx(1.0, 0.0), cplx(1.5, 0.0), cplx(2.0, 0.5)}) {
        for (double t : {0.0, 1.0, 2.0}) {
            pair = std::max(pair, gamma_cosine_pair_check(s, t, qc));
            swapped = std::max(swapped, std::abs(gamma_product_cosine_integral(s, t, qc) -
                                                 gamma_product_cosine_closed(s, t)));
        }
    }
    r.measured = std::max(pair, swapped);
    r.passed = r.measured <= r.tolerance;
    r.notes.push_back(fmt("Gamma(s+i tau) Gamma(s-i tau) against its cosine integral: max residual %.3e", pair));
    r.notes.push_back(fmt("int Gamma(s+i tau) Gamma(s-i tau) cos(tau y) d tau against closed form: max residual %.3e",
                          swapped));
    r.seconds = timer.seconds();
    return r;
}

CriterionReport check_forward_routes(const VerifyOptions& opt) {
    Timer timer;
    CriterionReport r;
    r.id = 5;
    r.title = "forward transform: direct vs I-Bessel route";
    r.tolerance = 1e-6;
    const auto& e = catalog_entry("k0sqrt");
    const std::vector<double> taus = {0.5, 1.0, 2.0};
    const auto direct = parallel_map<double>(taus.size(), opt.threads,
                                             [&](std::size_t i) { return forward_F_at(e.fn, taus[i]); });
    const auto via = forward_F_via_phi(e.fn, taus, MellinStrip(0.25), {}, e.mellin);
    double worst = 0.0, closed = 0.0;
    for (std::size_t i = 0; i < taus.size(); ++i) {
        worst = std::max(worst, std::abs(direct[i] - via.values[i]) / std::abs(via.values[i]));
        const double c = (*e.ff)(taus[i]);
        closed = std::max(closed, std::abs(direct[i] - c) / std::abs(c));
    }
    r.measured = worst;
    r.passed = worst <= r.tolerance;
    r.notes.push_back("f = 2 K_0(2 sqrt x); phi = e^{-x} from f* = Gamma^2 on Re s = 3/4");
    r.notes.push_back(fmt("direct route against sqrt(pi/2) sech(pi tau) cos(tau ln(3 + 2 sqrt 2)): max rel %.3e",
                          closed));
    r.seconds = timer.seconds();
    return r;
}

CriterionReport check_mellin_identity(const VerifyOptions&) {
    Timer timer;
    CriterionReport r;
    r.id = 6;
    r.title = "Mellin identity for G (nu = 1/4)";
    r.tolerance = 1e-5;
    const auto& e = catalog_entry("gauss");
    for (double y : {1.0, 4.0}) {
        const auto rep = mellin_identity_check(e.fn, MellinStrip(0.25), y);
        r.measured = std::max(r.measured, rep.residual);
        r.notes.push_back(fmt("y = %g: contour side %.15f, Macdonald side %.15f", y, rep.lhs, rep.rhs));
    }
    r.passed = r.measured <= r.tolerance;
    r.seconds = timer.seconds();
    return r;
}

CriterionReport check_ki_integral(const VerifyOptions&) {
    Timer timer;
    CriterionReport r;
    r.id = 7;
    r.title = "int K_{ix}(y) I_z(y) dy/y = 1/(x^2+z^2)";
    r.tolerance = 1e-8;
    for (auto [x, z] : {std::pair{1.0, 0.5}, std::pair{2.0, 0.25}}) {
        const double v = macdonald_bessel_i_integral(x, z);
        const double exact = 1.0 / (x * x + z * z);
        r.measured = std::max(r.measured, std::abs(v - exact) / exact);
        r.notes.push_back(fmt("(x, z) = (%g, %g): %.15f", x, z, v));
    }
    r.passed = r.measured <= r.tolerance;
    r.seconds = timer.seconds();
    return r;
}

CriterionReport check_roundtrip_f(const VerifyOptions& opt) {
    Timer timer;
    CriterionReport r;
    r.id = 8;
    r.title = "round trip F and its inversion, 2 K_0(2 sqrt x)";
    r.tolerance = 1e-2;
    const auto& e = catalog_entry("k0sqrt");

    // Forward values on a tau grid wide enough for the regularized inversion.
    const double tau_max = 6.0 * opt.regularization;
    const auto taus = linspace(0.0, tau_max, static_cast<int>(std::lround(tau_max / 0.05)) + 1);
    const auto fvals = parallel_map<double>(taus.size(), opt.threads, [&](std::size_t i) {
        return forward_F_at(e.fn, taus[i], {}, ForwardRoute::parseval, e.mellin);
    });
    const auto ff = SampledFunction::from_samples(Domain::half_line, taus, fvals, {Decay::Kind::sech_pi, 0.0}, "Ff");

    try {
        invert_F(ff, {1.0});
        r.notes.push_back("unregularized inversion unexpectedly accepted");
    } catch (const IntegrabilityError& err) {
        r.notes.push_back(std::string("unregularized: IntegrabilityError (") + err.what() + ")");
    }

    const auto xs = linspace(0.5, 5.0, 19);
    InvertFOptions io;
    io.regularization = opt.regularization;
    io.tau_max = tau_max;
    const auto vals = parallel_map<double>(xs.size(), opt.threads, [&](std::size_t i) {
        return invert_F(ff, {xs[i]}, {}, {1, 0.0, 4}, io).values[0];
    });
    double err = 0.0, sup = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        err = std::max(err, std::abs(vals[i] - e.fn(xs[i])));
        sup = std::max(sup, std::abs(e.fn(xs[i])));
    }
    r.measured = err / sup;
    r.passed = r.measured <= r.tolerance;
    r.notes.push_back(fmt("Ff sampled on [0, %g] with step 0.05 via the Mellin-Parseval route (f* = Gamma^2)", tau_max));
    r.notes.push_back(fmt("tau integrand damped by exp(-(tau/T)^2), T = %g; x grid 0.5:5:19", opt.regularization));
    r.seconds = timer.seconds();
    return r;
}

CriterionReport check_roundtrip_g(const VerifyOptions& opt) {
    Timer timer;
    CriterionReport r;
    r.id = 9;
    r.title = std::string("round trip G and its inversion (") +
              (opt.g_form == InvertGForm::printed ? "printed" : "corrected") + ")";
    r.tolerance = 5e-2;
    const auto& e = catalog_entry("t2gauss");
    const auto gg = SampledFunction::from_callable(
        Domain::half_line, [&](double y) { return inverse_G_at(e.fn, y); }, {Decay::Kind::power, 0.5}, "Gg");

    const InvertGForm other = opt.g_form == InvertGForm::printed ? InvertGForm::corrected : InvertGForm::printed;
    const auto xs = linspace(0.5, 3.0, 11);
    struct Pair {
        double chosen, other;
    };
    const auto vals = parallel_map<Pair>(xs.size(), opt.threads, [&](std::size_t i) {
        return Pair{invert_G(gg, {xs[i]}, {}, {1, 0.0, 4}, opt.g_form).values[0],
                    invert_G(gg, {xs[i]}, {}, {1, 0.0, 4}, other).values[0]};
    });
    double err = 0.0, err_other = 0.0, sup = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        err = std::max(err, std::abs(vals[i].chosen - e.fn(xs[i])));
        err_other = std::max(err_other, std::abs(vals[i].other - e.fn(xs[i])));
        sup = std::max(sup, std::abs(e.fn(xs[i])));
    }
    r.measured = err / sup;
    r.passed = r.measured <= r.tolerance;
    for (std::size_t i : {std::size_t{0}, std::size_t{2}, std::size_t{6}, std::size_t{10}})
        r.notes.push_back(fmt("x = %g: g = %.6f, printed %.6f, corrected %.6f", xs[i], e.fn(xs[i]),
                              opt.g_form == InvertGForm::printed ? vals[i].chosen : vals[i].other,
                              opt.g_form == InvertGForm::printed ? vals[i].other : vals[i].chosen));
    r.notes.push_back(fmt("%s form (%s): relative sup error %.3e",
                          other == InvertGForm::printed ? "printed" : "corrected",
                          other == InvertGForm::printed ? "pi x y coth, 1/sqrt(pi) on the order derivative"
                                                        : "sqrt(pi) x y coth, 1/pi on the order derivative",
                          err_other / sup));

    // The inversion assumes Gg in L_1((1, inf)); partial integrals of |Gg| say otherwise.
    quad::QuadConfig loose;
    loose.abs_tol = 1e-8;
    loose.rel_tol = 1e-8;
    loose.strict = false;
    std::string growth = "int_1^Y |Gg| dy for Y = 100, 400, 1600:";
    double lo = 1.0, acc = 0.0;
    for (double y_hi : {100.0, 400.0, 1600.0}) {
        acc += quad::integrate<double>([&](double y) { return std::abs(gg(y)); }, lo, y_hi, loose,
                                       static_cast<int>(std::sqrt(y_hi)) * 4)
                   .value;
        lo = y_hi;
        growth += fmt(" %.3f", acc);
    }
    r.notes.push_back(growth + " (grows like sqrt(Y): Gg is not in L_1((1, inf)))");
    r.notes.push_back(fmt("Theta(1, 1): integral form %.10f, 2 y K form %.10f, ratio of the y K parts %.6f (sqrt(pi) = 1.772454)",
                          theta_kernel(1.0, 1.0, ThetaRoute::integral), theta_kernel(1.0, 1.0, ThetaRoute::printed),
                          (theta_kernel(1.0, 1.0, ThetaRoute::printed) - kSqrtPi / std::sinh(pi)) /
                              (theta_kernel(1.0, 1.0, ThetaRoute::integral) - kSqrtPi / std::sinh(pi))));
    r.seconds = timer.seconds();
    return r;
}

CriterionReport check_pde(const VerifyOptions& opt) {
    Timer timer;
    CriterionReport r;
    r.id = 10;
    r.title = std::string("wedge PDE residual (") + (opt.pde_form == PdeForm::printed ? "printed" : "corrected") +
              ") and initial condition";
    r.tolerance = 1e-4;
    const auto& g = catalog_entry("gauss");
    WedgeSpec wedge;
    wedge.beta = pi;
    const std::vector<std::pair<double, double>> pts = {{2.0, 0.5}, {5.0, 1.0}, {0.5, 0.2}};
    const PdeForm other = opt.pde_form == PdeForm::printed ? PdeForm::corrected : PdeForm::printed;
    struct Res {
        double chosen, other, cart;
    };
    const auto res = parallel_map<Res>(pts.size(), opt.threads, [&](std::size_t i) {
        const auto [rr, th] = pts[i];
        const auto p = pde_residual_polar(g.fn, rr, th, wedge, opt.pde_form);
        const auto q = pde_residual_polar(g.fn, rr, th, wedge, other);
        const auto c = pde_residual_cartesian(g.fn, rr * std::cos(th), rr * std::sin(th), wedge, opt.pde_form);
        return Res{p.normalized(), q.normalized(), std::abs(c.residual - p.residual) / p.scale};
    });
    double worst = 0.0, worst_other = 0.0, cart = 0.0;
    for (const auto& v : res) {
        worst = std::max(worst, v.chosen);
        worst_other = std::max(worst_other, v.other);
        cart = std::max(cart, v.cart);
    }
    const double ivp = ivp_check(catalog_entry("t2gauss").fn, wedge, {0.1, 1.0, 5.0, 20.0});
    const double ivp_gauss = ivp_check(g.fn, wedge, {0.1, 1.0, 5.0, 20.0});
    r.measured = worst;
    r.passed = worst <= r.tolerance && std::max(ivp, ivp_gauss) <= 1e-10;
    r.notes.push_back(fmt("coefficient of u_r: 1 %+g/r; with 1 %+g/r instead: max residual %.3e",
                          opt.pde_form == PdeForm::printed ? -7.0 : 1.0, other == PdeForm::printed ? -7.0 : 1.0,
                          worst_other));
    r.notes.push_back(fmt("Cartesian form minus polar form, relative to scale: max %.3e", cart));
    r.notes.push_back(fmt("initial condition |u(r, 0) - Gg(r)|: %.3e (tau^2 e^{-tau^2}), %.3e (e^{-tau^2}); tol 1e-10",
                          ivp, ivp_gauss));
    r.seconds = timer.seconds();
    return r;
}

} // namespace sqb
