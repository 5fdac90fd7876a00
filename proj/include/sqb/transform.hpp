#pragma once

// The index transforms F (half line to tau) and G (tau to half line), their
// inversion formulas and the auxiliary kernels they are built from.

#include <optional>
#include <vector>

#include "sqb/kernel.hpp"
#include "sqb/mellin.hpp"
#include "sqb/sampled_function.hpp"

namespace sqb {

// ---------------------------------------------------------------- forward

enum class ForwardRoute {
    direct,        // int_0^inf Phi_tau(x) f(x) dx with Phi from phi_direct
    mb_kernel,     // same integral with Phi from phi_mellin_barnes (slow)
    parseval,      // (1/2 pi i) int Phi_tau*(s) f*(1-s) ds on Re s = 1/8
};

ForwardRoute parse_forward_route(const std::string& s);

struct ForwardResult {
    std::vector<double> tau_grid;
    std::vector<double> values;
    double weighted_norm = 0.0; // int |f| e^{2 sqrt x} dx, +inf when the tail makes it diverge
};

/// int_0^inf |f(x)| e^{2 sqrt x} dx. Returns +inf when the decay tag rules out
/// convergence; NormError when the tag claims convergence but the quadrature
/// does not settle.
double weighted_norm(const SampledFunction& f, const quad::QuadConfig& cfg = {});

/// The direct route only keeps absolute accuracy (about 1e-17), while Ff decays
/// like e^{-pi tau}; the parseval route keeps relative accuracy when f* is known
/// in closed form.
double forward_F_at(const SampledFunction& f, double tau, const quad::QuadConfig& cfg = {},
                    ForwardRoute route = ForwardRoute::direct, const std::optional<ComplexFn>& f_star = std::nullopt);

ForwardResult forward_F(const SampledFunction& f, const std::vector<double>& tau_grid,
                        const quad::QuadConfig& cfg = {}, ForwardRoute route = ForwardRoute::direct,
                        const std::optional<ComplexFn>& f_star = std::nullopt);

/// sqrt(pi) sech(pi tau) int_0^inf Re I_{i tau}(x/2) e^{-x/2} phi(x) dx where
/// phi is the inverse Mellin transform of f*(s)/Gamma(s) on Re s = 1 - nu.
ForwardResult forward_F_via_phi(const SampledFunction& f, const std::vector<double>& tau_grid,
                                const MellinStrip& strip, const quad::QuadConfig& cfg = {},
                                const std::optional<ComplexFn>& f_star = std::nullopt);

// ---------------------------------------------------------------- inverse

struct InverseResult {
    std::vector<double> x_grid;
    std::vector<double> values;
    double l1_norm_g = 0.0;
};

/// int |g| over the real line; NormError for tails that are not integrable.
double l1_norm(const SampledFunction& g, const quad::QuadConfig& cfg = {});

double inverse_G_at(const SampledFunction& g, double x, const quad::QuadConfig& cfg = {});
InverseResult inverse_G(const SampledFunction& g, const std::vector<double>& x_grid, const quad::QuadConfig& cfg = {});

struct IdentityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0; // |lhs - rhs| / max(1, |rhs|)
};

/// Both sides of
///   (1/2 pi i) int_nu Gamma(s) Gamma(1-s)^2 (Gg)*(s) y^{-s} ds
///     = sqrt(pi) e^{y/2} int_R K_{i tau}(y/2) g(tau) sech(pi tau) d tau,
/// with (Gg)*(s) = int g(tau) Phi_tau*(s) d tau. Needs 0 < nu < 1/2.
IdentityReport mellin_identity_check(const SampledFunction& g, const MellinStrip& strip, double y,
                                  const quad::QuadConfig& cfg = {});

// ---------------------------------------------------------------- kernels

/// 2 Re[J_{i tau}(sqrt x) dJ_nu/dnu(sqrt x) at nu = -i tau], the derivative in
/// eps of J_{eps + i tau} J_{eps - i tau} at eps = 0.
double eps_deriv_pair(double tau, double x);

/// Im[J_{i tau}(sqrt x)^2] / sinh(pi tau) - c * eps_deriv_pair(tau, x). Even in
/// tau; the value at tau = 0 is the limit.
double bessel_bracket(double x, double tau, double c);

/// -int_0^inf K_{i tau}(sqrt y)^2 / (x + y)^2 dy by quadrature.
double kernel_K_quadrature(double x, double tau, const quad::QuadConfig& cfg = {});
/// pi^3 / (2 sinh^2 pi tau) d/dx bessel_bracket(x, tau, 1/pi).
double kernel_K_closed(double x, double tau);

/// int_0^inf K_{ix}(y) I_z(y) dy / y, which equals 1 / (x^2 + z^2) for z > 0.
double macdonald_bessel_i_integral(double x, double z, const quad::QuadConfig& cfg = {});

// ---------------------------------------------------------------- inversion of F

struct InvertFOptions {
    /// Width T of the Gaussian factor e^{-(tau/T)^2} applied to the tau
    /// integrand; 0 leaves the integral unregularized.
    double regularization = 0.0;
    /// Upper tau limit; 0 picks 6 T when regularized and panels to the tail otherwise.
    double tau_max = 0.0;
};

struct InvertFResult {
    std::vector<double> x_grid;
    std::vector<double> values;
    bool regularized = false;
    double tau_max = 0.0;
};

/// f(x) = 2 sqrt(pi) d/dx int_0^inf tau coth(pi tau) bracket(x, tau, 1/pi) Ff(tau) d tau.
/// IntegrabilityError when Ff is not in L_1(tau e^{pi tau}) and no regularization
/// is requested.
InvertFResult invert_F(const SampledFunction& ff, const std::vector<double>& x_grid,
                            const quad::QuadConfig& cfg = {}, const quad::DiffStencil& stencil = {1, 0.0, 4},
                            const InvertFOptions& opt = {});

// ---------------------------------------------------------------- inversion of G

enum class ThetaRoute {
    integral,  // sqrt(pi)/(x sinh pi x) - (2/sqrt pi) int K_{ix}^2(sqrt(y t)) (1+t)^{-2} dt
    printed,   // sqrt(pi)/(x sinh pi x) + 2 y K(y, x)
    corrected, // sqrt(pi)/(x sinh pi x) + (2/sqrt pi) y K(y, x)
};

double theta_kernel(double x, double y, ThetaRoute route = ThetaRoute::integral, const quad::QuadConfig& cfg = {});

struct InvertGResult {
    std::vector<double> x_grid;
    std::vector<double> values;
};

enum class InvertGForm {
    printed,   // pi x y coth(pi x) d/dy bracket(y, x, 1/sqrt pi)
    corrected, // sqrt(pi) x y coth(pi x) d/dy bracket(y, x, 1/pi), from Theta with (2/sqrt pi) y K
};

/// g(x) = int_0^inf Gg(y) [cosh(pi x)/(pi sqrt pi) + c x y coth(pi x) d/dy bracket(y, x, b)] dy / y
/// with (c, b) chosen by form.
InvertGResult invert_G(const SampledFunction& gg, const std::vector<double>& x_grid,
                       const quad::QuadConfig& cfg = {}, const quad::DiffStencil& stencil = {1, 0.0, 4},
                       InvertGForm form = InvertGForm::printed);

} // namespace sqb
