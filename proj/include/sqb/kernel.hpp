#pragma once

// Phi_tau(x) = sqrt(pi) sech(pi tau) Re[J_{i tau}(sqrt x)^2] by three routes,
// and the residual of its third-order ODE.

#include "sqb/quad.hpp"
#include "sqb/specfun.hpp"

namespace sqb {

enum class KernelMethod { direct, mellin_barnes, cosine_rep };

KernelMethod parse_kernel_method(const std::string& s);

struct KernelPoint {
    double tau = 0.0;
    double x = 1.0;
    KernelMethod method = KernelMethod::direct;
};

/// Contour used by phi_mellin_barnes unless the caller supplies one.
quad::ContourSpec default_kernel_contour();

double phi_direct(double tau, double x);
/// Integrand of the Mellin-Barnes representation without x^{-s}.
cplx phi_mb_integrand(double tau, cplx s);
double phi_mellin_barnes(double tau, double x, const quad::ContourSpec& spec = default_kernel_contour(),
                         const quad::QuadConfig& qc = {});
/// sqrt(x) int_0^inf cos(tau u) sech(u/2) L_1(2 i sqrt(x) cosh(u/2)) du.
double cosine_rep_integral(double tau, double x, const quad::QuadConfig& qc = {});
/// stencil.h <= 0 selects the balanced default step.
double phi_cosine_rep(double tau, double x, const quad::QuadConfig& qc = {},
                      const quad::DiffStencil& stencil = {1, 0.0, 4});
double phi(const KernelPoint& p);

/// Which coefficient of Phi' the ODE carries: the printed tau^2 + x - 7, or
/// tau^2 + x + 1, the one Phi actually satisfies.
enum class OdeForm { printed, corrected };

struct OdeResidual {
    double residual = 0.0;
    double scale = 1.0; // max(1, x^2 |Phi'''|)
    double normalized() const { return std::abs(residual) / scale; }
};

OdeResidual ode_residual(double tau, double x, const quad::DiffStencil& stencil = {3, 0.0, 4},
                         OdeForm form = OdeForm::printed);

} // namespace sqb
