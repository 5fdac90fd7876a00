// sqbessel: kernels, transforms, inversions and verification suites from the
// command line. Exit codes: 0 success, 1 verification failure, 2 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqb/catalog.hpp"
#include "sqb/errors.hpp"
#include "sqb/io.hpp"
#include "sqb/parallel.hpp"
#include "sqb/pde.hpp"
#include "sqb/transform.hpp"
#include "sqb/verify.hpp"

namespace {

using namespace sqb;

struct Common {
    int threads = 1;
    std::string out;
    std::string format = "csv";
    double abs_tol = 0.0;
    double rel_tol = 0.0;

    quad::QuadConfig quad() const {
        quad::QuadConfig qc;
        if (abs_tol > 0.0) qc.abs_tol = abs_tol;
        if (rel_tol > 0.0) qc.rel_tol = rel_tol;
        qc.validate();
        return qc;
    }
};

class VerificationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw SchemaError("cannot write '" + c.out + "'");
    f << text;
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& cols) {
    std::string s;
    for (std::size_t j = 0; j < header.size(); ++j) s += (j ? "," : "") + header[j];
    s += "\n";
    for (std::size_t i = 0; i < cols.front().size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) s += (j ? "," : "") + format_number(cols[j][i]);
        s += "\n";
    }
    return s;
}

// Rows of a tensor grid a x b, a varying slowest.
void tensor(const std::vector<double>& a, const std::vector<double>& b, std::vector<double>& ra,
            std::vector<double>& rb) {
    for (double u : a)
        for (double v : b) {
            ra.push_back(u);
            rb.push_back(v);
        }
}

std::vector<double> grid_option(const std::string& value, const std::string& grid, const char* name) {
    if (!grid.empty()) return parse_grid(grid);
    if (!value.empty()) return parse_grid(value);
    throw SchemaError(std::string("--") + name + " or --" + name + "-grid is required");
}

// "builtin:NAME" of a catalog entry with a closed-form Ff, or a JSON file of Ff samples.
SampledFunction load_ff(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) {
        const auto& e = catalog_entry(spec);
        if (!e.ff) throw SchemaError(spec + " has no closed-form Ff; pass a JSON file of Ff samples");
        return SampledFunction::from_callable(Domain::half_line, *e.ff, {Decay::Kind::sech_pi, 0.0}, "Ff");
    }
    return load_sampled_function(spec);
}

double report_error(const std::vector<double>& xs, const std::vector<double>& got, const std::string& reference,
                    std::vector<double>& ref_col) {
    const auto ref = load_sampled_function(reference);
    double err = 0.0, sup = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ref_col.push_back(ref(xs[i]));
        err = std::max(err, std::abs(got[i] - ref_col.back()));
        sup = std::max(sup, std::abs(ref_col.back()));
    }
    return sup > 0.0 ? err / sup : err;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Index transforms with squared Bessel kernels"};
    app.require_subcommand(1);
    Common c;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", c.out, "output path (default stdout)");
        sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--abs-tol", c.abs_tol, "absolute quadrature tolerance");
        sub->add_option("--rel-tol", c.rel_tol, "relative quadrature tolerance");
    };

    std::string tau, tau_grid, x, x_grid, r_opt, theta_opt, method = "direct", route = "auto", fspec, gspec,
        reference, form = "printed";
    double abscissa = 0.0, height = 0.0, regularize = 10.0, tau_max = 0.0, tolerance = 0.0, beta = std::numbers::pi;
    std::vector<std::string> suites;
    bool residual = false;

    auto* kernel = app.add_subcommand("kernel", "Phi_tau(x) on a grid");
    add_common(kernel);
    kernel->add_option("--tau", tau, "value or a:b:n");
    kernel->add_option("--tau-grid", tau_grid, "a:b:n");
    kernel->add_option("--x", x, "value or a:b:n");
    kernel->add_option("--x-grid", x_grid, "a:b:n");
    kernel->add_option("--method", method, "direct, mb or cosine")->check(CLI::IsMember({"direct", "mb", "cosine"}));
    kernel->add_option("--contour-abscissa", abscissa, "Re s of the Mellin-Barnes contour");
    kernel->add_option("--contour-height", height, "vertical extent before the contour bends");

    auto* forward = app.add_subcommand("forward", "(Ff)(tau) = int Phi_tau(x) f(x) dx");
    add_common(forward);
    forward->add_option("--f", fspec, "builtin:NAME or JSON path")->required();
    forward->add_option("--tau", tau, "value or a:b:n");
    forward->add_option("--tau-grid", tau_grid, "a:b:n");
    forward->add_option("--route", route, "auto, direct, mb, parseval or phi")
        ->check(CLI::IsMember({"auto", "direct", "mb", "parseval", "phi"}));
    forward->add_option("--contour-abscissa", abscissa, "strip abscissa nu for the phi route (default 1/4)");

    auto* inverse = app.add_subcommand("inverse", "(Gg)(x) = int_R Phi_tau(x) g(tau) d tau");
    add_common(inverse);
    inverse->add_option("--g", gspec, "builtin:NAME or JSON path")->required();
    inverse->add_option("--x", x, "value or a:b:n");
    inverse->add_option("--x-grid", x_grid, "a:b:n");

    auto* invf = app.add_subcommand("invert-forward", "recover f from samples of Ff");
    add_common(invf);
    invf->add_option("--f", fspec, "JSON file of Ff, or builtin:NAME for its closed-form Ff")->required();
    invf->add_option("--x", x, "value or a:b:n");
    invf->add_option("--x-grid", x_grid, "a:b:n");
    invf->add_option("--regularize", regularize, "width T of exp(-(tau/T)^2); 0 disables");
    invf->add_option("--tau-max", tau_max, "upper tau limit (default 6 T)");
    invf->add_option("--reference", reference, "builtin:NAME to compare against");
    invf->add_option("--tolerance", tolerance, "relative sup error allowed against --reference (default 1e-2)");

    auto* invg = app.add_subcommand("invert-inverse", "recover g from samples of Gg");
    add_common(invg);
    invg->add_option("--g", gspec, "JSON file of Gg, or builtin:NAME to transform first")->required();
    invg->add_option("--tau", tau, "value or a:b:n");
    invg->add_option("--tau-grid", tau_grid, "a:b:n");
    invg->add_option("--reference", reference, "builtin:NAME to compare against");
    invg->add_option("--tolerance", tolerance, "relative sup error allowed against --reference (default 5e-2)");
    invg->add_option("--form", form, "printed or corrected")->check(CLI::IsMember({"printed", "corrected"}));

    auto* pde = app.add_subcommand("pde", "u(r, theta) on a wedge");
    add_common(pde);
    pde->add_option("--g", gspec, "builtin:NAME or JSON path")->required();
    pde->add_option("--r", r_opt, "value or a:b:n")->required();
    pde->add_option("--theta", theta_opt, "value or a:b:n")->required();
    pde->add_option("--beta", beta, "wedge opening");
    pde->add_option("--form", form, "printed or corrected")->check(CLI::IsMember({"printed", "corrected"}));
    pde->add_flag("--residual", residual, "also print the normalized residual of the equation");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify);
    verify->add_option("--suite", suites, "suite name or all (repeatable)")->required();
    verify->add_option("--form", form, "printed or corrected, for the ODE, the G inversion and the PDE")
        ->check(CLI::IsMember({"printed", "corrected"}));
    verify->add_option("--regularize", regularize, "Gaussian width for the F round trip");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto qc = c.quad();

        if (kernel->parsed()) {
            const auto taus = grid_option(tau, tau_grid, "tau");
            const auto xs = grid_option(x, x_grid, "x");
            std::vector<double> rt, rx;
            tensor(taus, xs, rt, rx);
            auto contour = default_kernel_contour();
            if (abscissa != 0.0) contour.abscissa = abscissa;
            if (height != 0.0) contour.height = height;
            contour.validate();
            const auto kind = parse_kernel_method(method);
            const auto vals = parallel_map<double>(rt.size(), c.threads, [&](std::size_t i) {
                switch (kind) {
                case KernelMethod::direct: return phi_direct(rt[i], rx[i]);
                case KernelMethod::mellin_barnes: return phi_mellin_barnes(rt[i], rx[i], contour, qc);
                case KernelMethod::cosine_rep: return phi_cosine_rep(rt[i], rx[i], qc);
                }
                return 0.0;
            });
            if (c.format == "json") {
                if (taus.size() != 1) throw SchemaError("--format json needs a single tau for kernel");
                emit(c, to_json(Domain::half_line, rx, vals, {Decay::Kind::power, 0.5}));
            } else {
                emit(c, csv({"tau", "x", "value"}, {rt, rx, vals}));
            }
            return 0;
        }

        if (forward->parsed()) {
            const auto f = load_sampled_function(fspec);
            const auto taus = grid_option(tau, tau_grid, "tau");
            std::optional<ComplexFn> f_star;
            if (fspec.rfind("builtin:", 0) == 0) f_star = catalog_entry(fspec).mellin;
            std::vector<double> vals;
            if (route == "phi") {
                vals = forward_F_via_phi(f, taus, MellinStrip(abscissa != 0.0 ? abscissa : 0.25), qc, f_star).values;
            } else {
                // Without a closed-form f* the contour route has nothing to work with.
                const ForwardRoute rt = route == "auto"
                                            ? (f_star ? ForwardRoute::parseval : ForwardRoute::direct)
                                            : parse_forward_route(route);
                vals = parallel_map<double>(taus.size(), c.threads,
                                            [&](std::size_t i) { return forward_F_at(f, taus[i], qc, rt, f_star); });
            }
            if (c.format == "json")
                emit(c, to_json(Domain::half_line, taus, vals, {Decay::Kind::sech_pi, 0.0}));
            else
                emit(c, csv({"tau", "value"}, {taus, vals}));
            return 0;
        }

        if (inverse->parsed()) {
            const auto g = load_sampled_function(gspec);
            const auto xs = grid_option(x, x_grid, "x");
            const auto vals =
                parallel_map<double>(xs.size(), c.threads, [&](std::size_t i) { return inverse_G_at(g, xs[i], qc); });
            if (c.format == "json")
                emit(c, to_json(Domain::half_line, xs, vals, {Decay::Kind::power, 0.5}));
            else
                emit(c, csv({"x", "value"}, {xs, vals}));
            return 0;
        }

        if (invf->parsed()) {
            const auto ff = load_ff(fspec);
            const auto xs = grid_option(x, x_grid, "x");
            InvertFOptions io;
            io.regularization = regularize;
            io.tau_max = tau_max;
            if (regularize > 0.0)
                std::fprintf(stderr, "note: tau integrand damped by exp(-(tau/%g)^2) (--regularize 0 disables)\n",
                             regularize);
            const auto vals = parallel_map<double>(xs.size(), c.threads, [&](std::size_t i) {
                return invert_F(ff, {xs[i]}, qc, {1, 0.0, 4}, io).values[0];
            });
            std::vector<double> ref;
            double err = 0.0;
            if (!reference.empty()) err = report_error(xs, vals, reference, ref);
            if (c.format == "json")
                emit(c, to_json(Domain::half_line, xs, vals, {Decay::Kind::exp_sqrt, 2.0}));
            else if (ref.empty())
                emit(c, csv({"x", "value"}, {xs, vals}));
            else
                emit(c, csv({"x", "value", "reference"}, {xs, vals, ref}));
            if (!reference.empty()) {
                const double tol = tolerance > 0.0 ? tolerance : 1e-2;
                std::fprintf(stderr, "relative sup error against %s: %.3e (tolerance %.1e)\n", reference.c_str(), err,
                             tol);
                if (!(err <= tol)) throw VerificationFailed("inversion of F misses the reference");
            }
            return 0;
        }

        if (invg->parsed()) {
            SampledFunction gg = load_sampled_function(gspec);
            if (gspec.rfind("builtin:", 0) == 0) {
                const auto g = gg;
                gg = SampledFunction::from_callable(
                    Domain::half_line, [g, qc](double y) { return inverse_G_at(g, y, qc); },
                    {Decay::Kind::power, 0.5}, "Gg");
            }
            const auto taus = grid_option(tau, tau_grid, "tau");
            const InvertGForm gf = form == "printed" ? InvertGForm::printed : InvertGForm::corrected;
            const auto vals = parallel_map<double>(
                taus.size(), c.threads, [&](std::size_t i) { return invert_G(gg, {taus[i]}, qc, {1, 0.0, 4}, gf).values[0]; });
            std::vector<double> ref;
            double err = 0.0;
            if (!reference.empty()) err = report_error(taus, vals, reference, ref);
            if (c.format == "json")
                emit(c, to_json(Domain::real_line, taus, vals, {Decay::Kind::exp, 1.0}));
            else if (ref.empty())
                emit(c, csv({"tau", "value"}, {taus, vals}));
            else
                emit(c, csv({"tau", "value", "reference"}, {taus, vals, ref}));
            if (!reference.empty()) {
                const double tol = tolerance > 0.0 ? tolerance : 5e-2;
                std::fprintf(stderr, "relative sup error against %s: %.3e (tolerance %.1e)\n", reference.c_str(), err,
                             tol);
                if (!(err <= tol)) throw VerificationFailed("inversion of G misses the reference");
            }
            return 0;
        }

        if (pde->parsed()) {
            const auto g = load_sampled_function(gspec);
            WedgeSpec wedge;
            wedge.beta = beta;
            wedge.validate();
            check_wedge_integrability(g, wedge, qc);
            std::vector<double> rr, rt;
            tensor(parse_grid(r_opt), parse_grid(theta_opt), rr, rt);
            for (double th : rt)
                if (!wedge.contains_angle(th)) throw DomainError("theta outside [0, beta)");
            const PdeForm pf = form == "printed" ? PdeForm::printed : PdeForm::corrected;
            struct Row {
                double u, res;
            };
            const auto rows = parallel_map<Row>(rr.size(), c.threads, [&](std::size_t i) {
                Row row{evaluate_u(g, rr[i], rt[i], wedge, qc), 0.0};
                if (residual) row.res = pde_residual_polar(g, rr[i], rt[i], wedge, pf).normalized();
                return row;
            });
            std::vector<double> u, res;
            for (const auto& row : rows) {
                u.push_back(row.u);
                res.push_back(row.res);
            }
            if (c.format == "json") throw SchemaError("pde output is two-dimensional; use --format csv");
            if (residual)
                emit(c, csv({"r", "theta", "u", "residual"}, {rr, rt, u, res}));
            else
                emit(c, csv({"r", "theta", "u"}, {rr, rt, u}));
            return 0;
        }

        if (verify->parsed()) {
            VerifyOptions vo;
            vo.ode_form = form == "printed" ? OdeForm::printed : OdeForm::corrected;
            vo.pde_form = form == "printed" ? PdeForm::printed : PdeForm::corrected;
            vo.g_form = form == "printed" ? InvertGForm::printed : InvertGForm::corrected;
            vo.threads = c.threads;
            vo.regularization = regularize;
            std::vector<std::string> names;
            for (const auto& s : suites) {
                if (s == "all")
                    names.insert(names.end(), suite_names().begin(), suite_names().end());
                else if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
                    throw SchemaError("unknown suite '" + s + "'");
                else
                    names.push_back(s);
            }
            std::ostringstream text;
            bool ok = true;
            for (const auto& s : names) {
                for (const auto& rep : run_suite(s, vo)) {
                    ok = ok && rep.passed;
                    text << s << ": " << format_report_line(rep) << "\n";
                    for (const auto& n : rep.notes) text << "      " << n << "\n";
                }
            }
            emit(c, text.str());
            if (!ok) throw VerificationFailed("at least one criterion failed");
            return 0;
        }
    } catch (const VerificationFailed& e) {
        std::fprintf(stderr, "%s: verification failed: %s\n", app.get_subcommands().front()->get_name().c_str(),
                     e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s: error: %s\n", app.get_subcommands().front()->get_name().c_str(), e.what());
        return 2;
    }
    return 2;
}
