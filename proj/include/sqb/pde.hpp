#pragma once

// u(r, theta) = sqrt(pi) int_R Re[J_{i tau}(sqrt r)^2] e^{theta tau} g(tau) sech(pi tau) d tau
// on a wedge, and the residuals of the third-order equation it is meant to solve.

#include <array>
#include <numbers>
#include <vector>

#include "sqb/quad.hpp"
#include "sqb/sampled_function.hpp"

namespace sqb {

struct WedgeSpec {
    static constexpr double kGuard = 0.05; // beta stays this far below 2 pi

    double beta = std::numbers::pi;
    double r_min = 0.1;
    double r_max = 100.0;
    std::vector<double> theta_grid;

    void validate() const;
    bool contains_angle(double theta) const { return theta >= 0.0 && theta < beta; }
};

/// IntegrabilityError unless int |g| e^{beta |tau|} d tau is finite.
void check_wedge_integrability(const SampledFunction& g, const WedgeSpec& wedge, const quad::QuadConfig& cfg = {});

double evaluate_u(const SampledFunction& g, double r, double theta, const WedgeSpec& wedge,
                  const quad::QuadConfig& cfg = {});

/// d^k u / d theta^k, taken under the integral (factor tau^k).
double evaluate_u_dtheta(const SampledFunction& g, double r, double theta, int k, const WedgeSpec& wedge,
                         const quad::QuadConfig& cfg = {});

/// printed: coefficient (1 - 7/r) on u_r; corrected: (1 + 1/r), the one u satisfies.
enum class PdeForm { printed, corrected };

struct PdeResidual {
    double residual = 0.0;
    std::array<double, 5> terms{}; // r u_rrr, u_rthth / r, 3 u_rr, c(r) u_r, u / (2r)
    double scale = 1.0;            // max |term|
    double normalized() const { return std::abs(residual) / scale; }
};

/// r-derivatives by central differences on evaluate_u (stencil.h <= 0 picks a
/// default step); theta-derivatives analytically.
PdeResidual pde_residual_polar(const SampledFunction& g, double r, double theta, const WedgeSpec& wedge,
                               PdeForm form = PdeForm::printed, const quad::DiffStencil& stencil = {1, 0.0, 4},
                               const quad::QuadConfig& cfg = {});

/// (x d/dx + y d/dy + 2) Lap u + c(r)/r^2 (x u_x + y u_y) + u / (2r) with
/// c(r) = r - 8 (printed) or r (corrected), all by finite differences of step h.
PdeResidual pde_residual_cartesian(const SampledFunction& g, double x, double y, const WedgeSpec& wedge,
                                   PdeForm form = PdeForm::printed, double h = 1e-2,
                                   const quad::QuadConfig& cfg = {});

/// max over x_grid of |u(r, 0) - (Gg)(r)|.
double ivp_check(const SampledFunction& g, const WedgeSpec& wedge, const std::vector<double>& x_grid,
                 const quad::QuadConfig& cfg = {});

} // namespace sqb
